#include "gsavbq/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsavbq {

// ---------------------------------------------------------------------------
// Grid sampling helpers

VectorField sample_f1(const ProblemSpec& spec, double t) {
    if (!spec.f1) return VectorField(spec.grid, Bc::NeumannZero);
    return VectorField::sample(spec.grid, Bc::NeumannZero,
                               [&](double x, double y) { return spec.f1(t, x, y); });
}

VectorField apply_f2(const ProblemSpec& spec, const ScalarField& theta) {
    VectorField out(theta.grid(), Bc::NeumannZero);
    if (!spec.f2) return out;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const Vec2 v = spec.f2(theta[k]);
        out.x[k] = v[0];
        out.y[k] = v[1];
    }
    return out;
}

ScalarField sample_g(const ProblemSpec& spec, double t) {
    if (!spec.g) return ScalarField(spec.grid, Bc::NeumannZero);
    return ScalarField::sample(spec.grid, Bc::NeumannZero,
                               [&](double x, double y) { return spec.g(t, x, y); });
}

VectorField total_force(const ProblemSpec& spec, double t, const ScalarField& theta) {
    VectorField f = apply_f2(spec, theta);
    if (spec.f1) f += sample_f1(spec, t);
    return f;
}

ScalarField initial_theta(const ProblemSpec& spec) {
    if (!spec.theta0) return ScalarField(spec.grid, spec.theta_bc);
    return ScalarField::sample(spec.grid, spec.theta_bc, spec.theta0);
}

VectorField initial_velocity(const ProblemSpec& spec) {
    if (!spec.u0) return VectorField(spec.grid, Bc::DirichletZero);
    return VectorField::sample(spec.grid, Bc::DirichletZero, spec.u0);
}

ScalarField initial_pressure(const ProblemSpec& spec) {
    if (!spec.p0) return ScalarField(spec.grid, Bc::NeumannZero);
    return mean_zero_project(ScalarField::sample(spec.grid, Bc::NeumannZero, spec.p0));
}

namespace {

const ExactSolution& require_exact(const ProblemSpec& spec) {
    if (!spec.exact) throw std::invalid_argument("problem '" + spec.name + "' has no exact solution");
    return *spec.exact;
}

}  // namespace

ScalarField exact_theta(const ProblemSpec& spec, double t) {
    const auto& ex = require_exact(spec);
    return ScalarField::sample(spec.grid, spec.theta_bc,
                               [&](double x, double y) { return ex.theta(t, x, y); });
}

VectorField exact_velocity(const ProblemSpec& spec, double t) {
    const auto& ex = require_exact(spec);
    return VectorField::sample(spec.grid, Bc::DirichletZero,
                               [&](double x, double y) { return ex.u(t, x, y); });
}

ScalarField exact_pressure(const ProblemSpec& spec, double t) {
    const auto& ex = require_exact(spec);
    return mean_zero_project(ScalarField::sample(
        spec.grid, Bc::NeumannZero, [&](double x, double y) { return ex.p(t, x, y); }));
}

// ---------------------------------------------------------------------------
// Manufactured solution

namespace {

constexpr double pi = std::numbers::pi;

struct Trig {
    double sx, cx, sy, cy;
    Trig(double x, double y)
        : sx(std::sin(2 * pi * x)), cx(std::cos(2 * pi * x)), sy(std::sin(2 * pi * y)),
          cy(std::cos(2 * pi * y)) {}
};

// Spatial profiles; the solution is sin(t) times these.
Vec2 u_profile(const Trig& s) { return {s.sx * s.sx * s.sy * s.cy, -s.sx * s.cx * s.sy * s.sy}; }

}  // namespace

Vec2 manufactured_f1(double t, double x, double y, double nu) {
    const Trig s(x, y);
    const double st = std::sin(t);
    const double ct = std::cos(t);
    const Vec2 u = u_profile(s);

    // partial derivatives of the profiles
    const double u1x = 4 * pi * s.sx * s.cx * s.sy * s.cy;
    const double u1y = 2 * pi * s.sx * s.sx * (s.cy * s.cy - s.sy * s.sy);
    const double u2x = -2 * pi * (s.cx * s.cx - s.sx * s.sx) * s.sy * s.sy;
    const double u2y = -4 * pi * s.sx * s.cx * s.sy * s.cy;
    const double lap1 = 8 * pi * pi * s.sy * s.cy * (s.cx * s.cx - 3 * s.sx * s.sx);
    const double lap2 = -8 * pi * pi * s.sx * s.cx * (s.cy * s.cy - 3 * s.sy * s.sy);
    const double px = 2 * pi * s.cx * s.sy;
    const double py = 2 * pi * s.sx * s.cy;
    const double theta = s.sx * s.sy;

    const double adv1 = u[0] * u1x + u[1] * u1y;
    const double adv2 = u[0] * u2x + u[1] * u2y;
    return {ct * u[0] + st * st * adv1 - nu * st * lap1 + st * px - st * theta,
            ct * u[1] + st * st * adv2 - nu * st * lap2 + st * py};
}

double manufactured_g(double t, double x, double y, double kappa) {
    const Trig s(x, y);
    const double st = std::sin(t);
    const Vec2 u = u_profile(s);
    const double theta = s.sx * s.sy;
    const double tx = 2 * pi * s.cx * s.sy;
    const double ty = 2 * pi * s.sx * s.cy;
    const double lap = -8 * pi * pi * theta;
    return std::cos(t) * theta + st * st * (u[0] * tx + u[1] * ty) - kappa * st * lap;
}

ProblemSpec manufactured_spec(int n, double nu, double kappa) {
    ProblemSpec s;
    s.name = "manufactured";
    s.grid = Grid::unit_square(n);
    s.nu = nu;
    s.kappa = kappa;
    s.theta_bc = Bc::DirichletZero;
    s.T = pi;
    s.alpha = 1.0;
    s.f2 = [](double th) { return Vec2{th, 0.0}; };
    s.f1 = [nu](double t, double x, double y) { return manufactured_f1(t, x, y, nu); };
    s.g = [kappa](double t, double x, double y) { return manufactured_g(t, x, y, kappa); };

    ExactSolution ex;
    ex.u = [](double t, double x, double y) {
        const Vec2 u = u_profile(Trig(x, y));
        const double st = std::sin(t);
        return Vec2{st * u[0], st * u[1]};
    };
    ex.theta = [](double t, double x, double y) {
        return std::sin(t) * std::sin(2 * pi * x) * std::sin(2 * pi * y);
    };
    ex.p = ex.theta;
    s.theta0 = [f = ex.theta](double x, double y) { return f(0.0, x, y); };
    s.u0 = [f = ex.u](double x, double y) { return f(0.0, x, y); };
    s.p0 = [f = ex.p](double x, double y) { return f(0.0, x, y); };
    s.exact = std::move(ex);
    return s;
}

// ---------------------------------------------------------------------------

ProblemSpec marsigli_spec(int nx, int ny, double Re, double Ri, double Pr) {
    ProblemSpec s;
    s.name = "marsigli";
    s.grid = Grid(0.0, 0.0, 8.0, 1.0, nx, ny);
    s.nu = 1.0 / Re;
    s.kappa = 1.0 / (Re * Pr);
    s.theta_bc = Bc::NeumannZero;
    s.T = 10.0;
    // buoyancy Ri * theta * e_g taken wholly as f2 (Lipschitz constant Ri)
    s.alpha = Ri;
    s.f2 = [Ri](double th) { return Vec2{0.0, Ri * th}; };
    const double w = s.grid.hx();
    s.theta0 = [w](double x, double) { return 1.25 + 0.25 * std::tanh((4.0 - x) / w); };
    return s;
}

ProblemSpec shear_layer_spec(int n, double rho, double delta, double nu) {
    ProblemSpec s;
    s.name = "shear";
    s.grid = Grid(-1.0, -1.0, 2.0, 2.0, n, n);
    s.nu = nu;
    s.kappa = nu;
    s.theta_bc = Bc::DirichletZero;
    s.T = 1.0;
    s.u0 = [rho, delta](double x, double y) {
        const double sign = y <= 0.0 ? 1.0 : -1.0;
        return Vec2{(1.0 + x) * (1.0 - y) * std::tanh(rho * (sign * y + 0.5)),
                    delta * std::sin(pi * x)};
    };
    return s;
}

ProblemSpec quiescent_spec(int n) {
    ProblemSpec s;
    s.name = "quiescent";
    s.grid = Grid::unit_square(n);
    s.T = 1.0;
    ExactSolution ex;
    ex.theta = [](double, double, double) { return 0.0; };
    ex.u = [](double, double, double) { return Vec2{0.0, 0.0}; };
    ex.p = [](double, double, double) { return 0.0; };
    s.exact = std::move(ex);
    return s;
}

}  // namespace gsavbq
