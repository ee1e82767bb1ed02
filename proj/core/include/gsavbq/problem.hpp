#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "gsavbq/grid.hpp"
#include "gsavbq/gsav.hpp"

namespace gsavbq {

using Vec2 = std::array<double, 2>;

using ScalarFn = std::function<double(double t, double x, double y)>;
using VectorFn = std::function<Vec2(double t, double x, double y)>;

struct ExactSolution {
    ScalarFn theta;
    VectorFn u;
    ScalarFn p;
};

/// Everything the stepper needs to know about a Boussinesq-type problem.
///
/// Forcing callables are evaluated at extrapolated times up to
/// T + max(k, l) * tau, so they must be defined beyond the end time.
/// Empty callables stand for zero.
struct ProblemSpec {
    std::string name;
    Grid grid;
    double nu = 1.0;
    double kappa = 1.0;
    Bc theta_bc = Bc::DirichletZero;
    double T = 1.0;

    VectorFn f1;
    std::function<Vec2(double theta)> f2;
    ScalarFn g;

    double alpha = 0.0;  ///< Lipschitz constant of f2
    double C_f1 = 0.0;
    double C_g = 0.0;

    std::function<double(double x, double y)> theta0;
    std::function<Vec2(double x, double y)> u0;
    std::function<double(double x, double y)> p0;

    std::optional<ExactSolution> exact;

    [[nodiscard]] GsavConstants constants() const { return derive_constants(alpha, C_f1, C_g); }
};

// Grid sampling helpers shared by the stepper and the harness.
VectorField sample_f1(const ProblemSpec& spec, double t);
VectorField apply_f2(const ProblemSpec& spec, const ScalarField& theta);
ScalarField sample_g(const ProblemSpec& spec, double t);
/// f(t, theta) = f1(t) + f2(theta)
VectorField total_force(const ProblemSpec& spec, double t, const ScalarField& theta);

ScalarField initial_theta(const ProblemSpec& spec);
VectorField initial_velocity(const ProblemSpec& spec);
ScalarField initial_pressure(const ProblemSpec& spec);

/// Exact snapshots; require spec.exact.
ScalarField exact_theta(const ProblemSpec& spec, double t);
VectorField exact_velocity(const ProblemSpec& spec, double t);
ScalarField exact_pressure(const ProblemSpec& spec, double t);

}  // namespace gsavbq
