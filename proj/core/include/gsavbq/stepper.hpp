#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gsavbq/grid.hpp"
#include "gsavbq/gsav.hpp"
#include "gsavbq/linsolve.hpp"
#include "gsavbq/operators.hpp"
#include "gsavbq/problem.hpp"

namespace gsavbq {

enum class StabKind { None, Sa, Sb };

/// Spatial stabilization added to the momentum equation, scaled by
/// 2 tau c_s h with h = min(hx, hy):
///   Sa: (-Lap) D^k(ubar^{n+1}, u^n, u^{n-1})
///   Sb: (-Lap) (ubar^{n+1} - u^{n-1})
struct Stabilization {
    StabKind kind = StabKind::None;
    double c_s = 0.5;
};

struct SchemeParams {
    BdfParams bdf;
    Stabilization stab;
    SolverOptions solver;
};

template <typename T>
struct TimeLevels {
    T cur;   ///< level n
    T prev;  ///< level n-1
};

/// Two time levels of every field the recurrence reads. u is the scaled
/// velocity eta * ubar.
struct History {
    int n = 1;
    double tau = 0.0;
    TimeLevels<ScalarField> theta;
    TimeLevels<VectorField> u_bar;
    TimeLevels<VectorField> u;
    TimeLevels<ScalarField> p;
    ScalarField psi;  ///< last pressure correction, reused as a CG initial guess

    [[nodiscard]] double t() const noexcept { return n * tau; }
};

struct SubsolveStats {
    SolveStats theta;
    SolveStats u_x;
    SolveStats u_y;
    SolveStats psi;
    SolveStats p_extrap;
};

struct StepReport {
    int n = 0;
    double t = 0.0;
    double energy = 0.0;  ///< E(theta^n, ubar^n)
    double r = 0.0;
    double xi = 1.0;
    double eta = 1.0;
    double div_norm = 0.0;  ///< |div ubar^n|
    SubsolveStats solves;
    bool diverged = false;
    std::string message;
};

struct StepResult {
    History history;
    GsavState state;
    StepReport report;
};

/// Temperature update: solves
///   (2l+1) th - 2 tau kappa l Lap th = 4l th^n - (2l-1) th^{n-1} - 2 tau kappa (l-1) Lap th^n
///                                      - 2 tau (d^{l+1}u^n . grad) d^{l+1}th^n + 2 tau g(t^{n+l})
ScalarField step_temperature(const History& hist, const SchemeParams& params,
                             const ProblemSpec& spec, double tau, double t_n,
                             SolveStats* stats = nullptr);

/// Unscaled velocity ubar^{n+1}, componentwise shifted-Laplacian solves with
/// explicit advection, pressure and buoyancy at the extrapolated level.
/// Reads the temperature history from hist.theta.
VectorField step_velocity(const History& hist, const SchemeParams& params,
                          const ProblemSpec& spec, double tau, double t_n,
                          SolveStats* stats_x = nullptr, SolveStats* stats_y = nullptr);

/// Pressure correction psi^{n+1}: -Lap psi = -(1/2tau) div D^k ubar^{n+1},
/// homogeneous Neumann, zero mean.
ScalarField compute_psi(const VectorField& u_bar_new, const History& hist, double tau, double k,
                        const SolverOptions& opts = {}, SolveStats* stats = nullptr);

/// Weak-form projection of a pressure onto what the momentum equation sees:
/// solves <grad x, grad q> = <G q_in, grad q> with the compact Neumann
/// Laplacian on the left and the summation-by-parts nodal gradient on the
/// right. Smooth fields are reproduced to discretization error; grid-scale
/// modes that the central gradient cannot see are damped. Zero mean.
ScalarField project_pressure(const ScalarField& q, const SolverOptions& opts = {},
                             SolveStats* stats = nullptr);

/// p^{n+1} = (k-1)/k p^n - nu div(ubar^{n+1} - (k-1)/k ubar^n) + 1/k P + 1/k psi^{n+1},
/// projected to zero mean, where P stands for d^{k+1}p^n. The stepper passes
/// project_pressure(d^{k+1}p^n); the short form uses d^{k+1}p^n verbatim.
ScalarField pressure_update(const History& hist, const VectorField& u_bar_new,
                            const ScalarField& psi_new, const ScalarField& p_extrap, double k,
                            double nu);
ScalarField pressure_update(const History& hist, const VectorField& u_bar_new,
                            const ScalarField& psi_new, double k, double nu);

/// One complete step n -> n+1. Solver failures and non-finite results are
/// reported through report.diverged; the returned history is then the input.
StepResult full_step(const History& hist, const GsavState& state, const SchemeParams& params,
                     const ProblemSpec& spec, double tau);

/// Closest no-slip field, in the Euclidean norm over nodal values, whose
/// divergence() vanishes at every node. Boundary values of u are dropped first.
VectorField project_velocity(const VectorField& u, const SolverOptions& opts = {},
                             SolveStats* stats = nullptr);

enum class BootstrapMode {
    Auto,     ///< Exact when the spec carries an exact solution, Substep otherwise
    Exact,    ///< copy exact snapshots at t = 0 and t = tau
    Substep,  ///< projected initial velocity, then first-order semi-implicit substeps on [0, tau]
};

struct BootstrapResult {
    History history;
    GsavState state;
    std::array<StepReport, 2> reports;  ///< levels 0 and 1
};

/// Produces the two starting levels and r^1 = E(theta^1, ubar^1) + C_bar.
BootstrapResult bootstrap(const ProblemSpec& spec, const SchemeParams& params, double tau,
                          BootstrapMode mode = BootstrapMode::Auto, int substeps = 16);

using StepObserver = std::function<void(const StepReport&, const History&)>;

struct RunOptions {
    double tau = 0.0;
    double T = 0.0;
    BootstrapMode bootstrap = BootstrapMode::Auto;
    int bootstrap_substeps = 16;
    /// A step diverges when E > blowup_factor * (E^0 + C_bar); <= 0 disables.
    double blowup_factor = 10.0;
    StepObserver observer;
};

struct RunResult {
    History history;
    GsavState state;
    std::vector<StepReport> reports;  ///< one per time level, starting at n = 0
    bool diverged = false;
    int diverged_step = -1;
    std::string message;
};

/// Number of steps T / tau; throws when tau does not divide T.
int step_count(double T, double tau);

/// Bootstrap followed by N - 1 full steps. The observer sees every level,
/// including the two bootstrap levels.
RunResult run(const ProblemSpec& spec, const SchemeParams& params, const RunOptions& opts);

}  // namespace gsavbq
