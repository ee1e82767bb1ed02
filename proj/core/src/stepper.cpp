#include "gsavbq/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsavbq {

namespace {

ScalarField with_bc(ScalarField f, Bc bc) {
    f.set_bc(bc);
    f.enforce_bc();
    return f;
}

StepReport make_report(int n, double tau, const ScalarField& theta, const VectorField& u_bar,
                       const GsavState& state, const GsavConstants& cst) {
    StepReport rep;
    rep.n = n;
    rep.t = n * tau;
    rep.energy = energy(theta, u_bar, cst);
    rep.r = state.r;
    rep.xi = state.xi;
    rep.eta = state.eta;
    rep.div_norm = norm_l2(divergence(u_bar));
    return rep;
}

bool report_finite(const StepReport& r) {
    return std::isfinite(r.energy) && std::isfinite(r.r) && std::isfinite(r.xi) &&
           std::isfinite(r.eta) && std::isfinite(r.div_norm);
}

}  // namespace

ScalarField step_temperature(const History& hist, const SchemeParams& params,
                             const ProblemSpec& spec, double tau, double t_n, SolveStats* stats) {
    const double l = params.bdf.l;
    const auto& th = hist.theta;

    ScalarField rhs = (4.0 * l) * th.cur;
    rhs.axpy(-(2.0 * l - 1.0), th.prev);
    if (l != 1.0) rhs.axpy(-2.0 * tau * spec.kappa * (l - 1.0), laplacian(th.cur));
    const VectorField w = extrap(hist.u.cur, hist.u.prev, l + 1.0);
    rhs.axpy(-2.0 * tau, advect(w, extrap(th.cur, th.prev, l + 1.0)));
    if (spec.g) rhs.axpy(2.0 * tau, sample_g(spec, t_n + l * tau));
    rhs = with_bc(std::move(rhs), spec.theta_bc);

    const ScalarField guess = extrap(th.cur, th.prev, 2.0);
    ScalarSolve s = solve_shifted(2.0 * l + 1.0, 2.0 * tau * spec.kappa * l, rhs, params.solver,
                                  &guess);
    if (stats != nullptr) *stats = s.stats;
    return std::move(s.x);
}

VectorField step_velocity(const History& hist, const SchemeParams& params,
                          const ProblemSpec& spec, double tau, double t_n, SolveStats* stats_x,
                          SolveStats* stats_y) {
    const double k = params.bdf.k;
    const auto& ub = hist.u_bar;

    VectorField rhs = (4.0 * k) * ub.cur;
    rhs.axpy(-(2.0 * k - 1.0), ub.prev);
    if (k != 1.0) rhs.axpy(-2.0 * tau * spec.nu * (k - 1.0), laplacian(ub.cur));

    const VectorField w = extrap(hist.u.cur, hist.u.prev, k + 1.0);
    rhs.axpy(-2.0 * tau, advect(w, w));
    rhs.axpy(-2.0 * tau, gradient(extrap(hist.p.cur, hist.p.prev, k + 1.0)));

    const ScalarField theta_ex = extrap(hist.theta.cur, hist.theta.prev, k + 1.0);
    rhs.axpy(2.0 * tau, total_force(spec, t_n + k * tau, theta_ex));

    double c = 2.0 * tau * spec.nu * k;
    const double s = 2.0 * tau * params.stab.c_s * spec.grid.h_min();
    switch (params.stab.kind) {
        case StabKind::None:
            break;
        case StabKind::Sa: {
            // history part of D^k moves to the right-hand side
            c += s * (2.0 * k + 1.0);
            VectorField hist_part = (4.0 * k) * hist.u.cur;
            hist_part.axpy(-(2.0 * k - 1.0), hist.u.prev);
            rhs.axpy(-s, laplacian(hist_part));
            break;
        }
        case StabKind::Sb:
            c += s;
            rhs.axpy(-s, laplacian(hist.u.prev));
            break;
    }

    rhs.x = with_bc(std::move(rhs.x), Bc::DirichletZero);
    rhs.y = with_bc(std::move(rhs.y), Bc::DirichletZero);

    const VectorField guess = extrap(ub.cur, ub.prev, 2.0);
    const double sigma = 2.0 * k + 1.0;
    ScalarSolve sx = solve_shifted(sigma, c, rhs.x, params.solver, &guess.x);
    ScalarSolve sy = solve_shifted(sigma, c, rhs.y, params.solver, &guess.y);
    if (stats_x != nullptr) *stats_x = sx.stats;
    if (stats_y != nullptr) *stats_y = sy.stats;
    return {std::move(sx.x), std::move(sy.x)};
}

ScalarField compute_psi(const VectorField& u_bar_new, const History& hist, double tau, double k,
                        const SolverOptions& opts, SolveStats* stats) {
    ScalarField rhs = divergence(bdf_comb(u_bar_new, hist.u_bar.cur, hist.u_bar.prev, k));
    rhs *= -1.0 / (2.0 * tau);
    const ScalarField* guess = hist.psi.size() == rhs.size() ? &hist.psi : nullptr;
    ScalarSolve s = solve_poisson_neumann(rhs, opts, guess);
    if (stats != nullptr) *stats = s.stats;
    return std::move(s.x);
}

ScalarField project_pressure(const ScalarField& q, const SolverOptions& opts, SolveStats* stats) {
    ScalarField rhs = divergence_weak(gradient_sbp(q));
    rhs *= -1.0;
    const ScalarField guess = mean_zero_project(q);
    ScalarSolve s = solve_poisson_neumann(rhs, opts, &guess);
    if (stats != nullptr) *stats = s.stats;
    return std::move(s.x);
}

ScalarField pressure_update(const History& hist, const VectorField& u_bar_new,
                            const ScalarField& psi_new, const ScalarField& p_extrap, double k,
                            double nu) {
    const double a = (k - 1.0) / k;
    VectorField du = u_bar_new;
    du.axpy(-a, hist.u_bar.cur);

    ScalarField p = a * hist.p.cur;
    p.set_bc(Bc::NeumannZero);
    p.axpy(-nu, divergence(du));
    p.axpy(1.0 / k, p_extrap);
    p.axpy(1.0 / k, psi_new);
    return mean_zero_project(p);
}

ScalarField pressure_update(const History& hist, const VectorField& u_bar_new,
                            const ScalarField& psi_new, double k, double nu) {
    return pressure_update(hist, u_bar_new, psi_new, extrap(hist.p.cur, hist.p.prev, k + 1.0), k,
                           nu);
}

StepResult full_step(const History& hist, const GsavState& state, const SchemeParams& params,
                     const ProblemSpec& spec, double tau) {
    const double k = params.bdf.k;
    const double t_n = hist.n * tau;
    const double t_next = (hist.n + 1) * tau;
    const GsavConstants cst = spec.constants();

    StepResult out{hist, state, {}};
    StepReport& rep = out.report;
    rep.n = hist.n + 1;
    rep.t = t_next;

    try {
        ScalarField theta = step_temperature(hist, params, spec, tau, t_n, &rep.solves.theta);
        // the velocity step reads the old temperature history, not theta^{n+1}
        VectorField u_bar =
            step_velocity(hist, params, spec, tau, t_n, &rep.solves.u_x, &rep.solves.u_y);
        ScalarField psi = compute_psi(u_bar, hist, tau, k, params.solver, &rep.solves.psi);
        const ScalarField p_extrap = project_pressure(extrap(hist.p.cur, hist.p.prev, k + 1.0),
                                                      params.solver, &rep.solves.p_extrap);
        ScalarField p = pressure_update(hist, u_bar, psi, p_extrap, k, spec.nu);

        const double E = energy(theta, u_bar, cst);
        const VectorField f_now = total_force(spec, t_next, theta);
        const ScalarField g_now = sample_g(spec, t_next);
        const double dEdt = energy_rate(theta, u_bar, f_now, g_now, spec.nu, spec.kappa, cst);

        GsavState next;
        next.r = update_r(state, E, dEdt, tau, cst);
        const XiEta xe = compute_xi_eta(next.r, E, cst);
        next.xi = xe.xi;
        next.eta = xe.eta;

        VectorField u = next.eta * u_bar;

        rep.energy = E;
        rep.r = next.r;
        rep.xi = next.xi;
        rep.eta = next.eta;
        rep.div_norm = norm_l2(divergence(u_bar));

        if (!report_finite(rep) || !theta.all_finite() || !u_bar.all_finite() ||
            !p.all_finite()) {
            rep.diverged = true;
            rep.message = "non-finite values at step " + std::to_string(rep.n);
            return out;
        }

        History& h = out.history;
        h.n = hist.n + 1;
        h.tau = tau;
        h.theta = {std::move(theta), hist.theta.cur};
        h.u_bar = {std::move(u_bar), hist.u_bar.cur};
        h.u = {std::move(u), hist.u.cur};
        h.p = {std::move(p), hist.p.cur};
        h.psi = std::move(psi);
        out.state = next;
    } catch (const SolveError& e) {
        rep.diverged = true;
        rep.message = std::string("solver failure at step ") + std::to_string(rep.n) + ": " +
                      e.what();
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Level {
    ScalarField theta;
    VectorField u;
    ScalarField p;
};

// First-order semi-implicit substep with a rotational incremental projection.
Level substep(const Level& cur, const ProblemSpec& spec, const SolverOptions& opts, double t,
              double dt) {
    ScalarField th_rhs = cur.theta;
    th_rhs.axpy(-dt, advect(cur.u, cur.theta));
    if (spec.g) th_rhs.axpy(dt, sample_g(spec, t + dt));
    th_rhs = with_bc(std::move(th_rhs), spec.theta_bc);
    ScalarField theta = solve_shifted(1.0, dt * spec.kappa, th_rhs, opts, &cur.theta).x;

    VectorField u_rhs = cur.u;
    u_rhs.axpy(-dt, advect(cur.u, cur.u));
    u_rhs.axpy(-dt, gradient(cur.p));
    u_rhs.axpy(dt, total_force(spec, t + dt, theta));
    u_rhs.x = with_bc(std::move(u_rhs.x), Bc::DirichletZero);
    u_rhs.y = with_bc(std::move(u_rhs.y), Bc::DirichletZero);
    VectorField u_star(solve_shifted(1.0, dt * spec.nu, u_rhs.x, opts, &cur.u.x).x,
                       solve_shifted(1.0, dt * spec.nu, u_rhs.y, opts, &cur.u.y).x);

    const ScalarField div_star = divergence(u_star);
    ScalarField phi = solve_poisson_neumann((-1.0 / dt) * div_star, opts).x;

    VectorField u = u_star;
    u.axpy(-dt, gradient(phi));
    u.x.set_bc(Bc::DirichletZero);
    u.y.set_bc(Bc::DirichletZero);
    u.enforce_bc();

    ScalarField p = cur.p;
    p.set_bc(Bc::NeumannZero);
    p += phi;
    p.axpy(-spec.nu, div_star);
    return {std::move(theta), std::move(u), mean_zero_project(p)};
}

}  // namespace

VectorField project_velocity(const VectorField& u, const SolverOptions& opts, SolveStats* stats) {
    // CG on B B^T lambda = B u with B = divergence() on no-slip fields, then
    // u - B^T lambda is the closest field (Euclidean) with zero discrete divergence.
    const Grid& g = u.grid();
    VectorField u0 = u;
    u0.x.set_bc(Bc::DirichletZero);
    u0.y.set_bc(Bc::DirichletZero);
    u0.enforce_bc();
    const auto dot = [](const ScalarField& a, const ScalarField& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    const auto apply = [](const ScalarField& q) { return divergence(divergence_transpose(q)); };

    ScalarField lambda(g, Bc::NeumannZero);
    ScalarField r = divergence(u0);
    ScalarField d = r;
    const double b_norm = std::sqrt(dot(r, r));
    double rr = b_norm * b_norm;
    // divergence that rounding alone leaves behind; already projected input stops here
    const double u_norm = std::sqrt(dot(u0.x, u0.x) + dot(u0.y, u0.y));
    const double floor =
        1e3 * std::numeric_limits<double>::epsilon() * u_norm * (1.0 / g.hx() + 1.0 / g.hy());
    const double target = std::max(opts.rtol * b_norm, floor);
    const int max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * g.nx() * g.ny();
    SolveStats st;
    st.converged = b_norm <= target;
    while (!st.converged && st.iterations < max_iter) {
        const ScalarField ad = apply(d);
        const double dad = dot(d, ad);
        if (!(dad > 0.0)) break;
        const double alpha = rr / dad;
        lambda.axpy(alpha, d);
        r.axpy(-alpha, ad);
        const double rr_new = dot(r, r);
        ++st.iterations;
        st.final_residual = std::sqrt(rr_new) / b_norm;
        if (std::sqrt(rr_new) <= target) st.converged = true;
        d *= rr_new / rr;
        d += r;
        rr = rr_new;
    }
    if (stats) *stats = st;
    if (!st.converged && b_norm > 0.0)
        throw SolveError("project_velocity: CG did not converge", st);
    u0.axpy(-1.0, divergence_transpose(lambda));
    u0.enforce_bc();
    return u0;
}

BootstrapResult bootstrap(const ProblemSpec& spec, const SchemeParams& params, double tau,
                          BootstrapMode mode, int substeps) {
    params.bdf.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("bootstrap: tau must be positive");
    if (mode == BootstrapMode::Auto)
        mode = spec.exact ? BootstrapMode::Exact : BootstrapMode::Substep;
    if (mode == BootstrapMode::Exact && !spec.exact)
        throw std::invalid_argument("bootstrap: exact mode requires an exact solution");
    if (substeps < 1) throw std::invalid_argument("bootstrap: substeps must be >= 1");

    const GsavConstants cst = spec.constants();
    Level l0{initial_theta(spec), initial_velocity(spec), initial_pressure(spec)};
    if (mode == BootstrapMode::Substep) l0.u = project_velocity(l0.u, params.solver);
    Level l1;
    if (mode == BootstrapMode::Exact) {
        l1 = {exact_theta(spec, tau), exact_velocity(spec, tau), exact_pressure(spec, tau)};
    } else {
        l1 = l0;
        const double dt = tau / substeps;
        for (int m = 0; m < substeps; ++m) l1 = substep(l1, spec, params.solver, m * dt, dt);
    }

    BootstrapResult out;
    History& h = out.history;
    h.n = 1;
    h.tau = tau;
    h.theta = {l1.theta, l0.theta};
    h.u_bar = {l1.u, l0.u};
    h.u = {l1.u, l0.u};
    h.p = {l1.p, l0.p};
    h.psi = ScalarField(spec.grid, Bc::NeumannZero);

    const GsavState s0 = GsavState::initial(energy(l0.theta, l0.u, cst), cst);
    const GsavState s1 = GsavState::initial(energy(l1.theta, l1.u, cst), cst);
    out.state = s1;
    out.reports[0] = make_report(0, tau, l0.theta, l0.u, s0, cst);
    out.reports[1] = make_report(1, tau, l1.theta, l1.u, s1, cst);
    return out;
}

int step_count(double T, double tau) {
    if (!(tau > 0.0) || !(T > 0.0)) throw std::invalid_argument("step_count: T and tau must be positive");
    const double ratio = T / tau;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio) || rounded < 1.0)
        throw std::invalid_argument("tau does not divide T");
    return static_cast<int>(rounded);
}

RunResult run(const ProblemSpec& spec, const SchemeParams& params, const RunOptions& opts) {
    const int N = step_count(opts.T, opts.tau);
    const GsavConstants cst = spec.constants();

    BootstrapResult boot =
        bootstrap(spec, params, opts.tau, opts.bootstrap, opts.bootstrap_substeps);
    RunResult out;
    out.history = std::move(boot.history);
    out.state = boot.state;
    const double blowup_ref = boot.reports[0].energy + cst.C_bar;

    for (const StepReport& rep : boot.reports) {
        out.reports.push_back(rep);
        if (opts.observer) opts.observer(rep, out.history);
    }

    for (int n = 1; n < N; ++n) {
        StepResult step = full_step(out.history, out.state, params, spec, opts.tau);
        if (!step.report.diverged && opts.blowup_factor > 0.0 &&
            step.report.energy > opts.blowup_factor * blowup_ref) {
            step.report.diverged = true;
            step.report.message = "energy blow-up at step " + std::to_string(step.report.n) +
                                  ": E = " + std::to_string(step.report.energy);
        }
        out.reports.push_back(step.report);
        if (step.report.diverged) {
            out.diverged = true;
            out.diverged_step = step.report.n;
            out.message = step.report.message;
            break;
        }
        out.history = std::move(step.history);
        out.state = step.state;
        if (opts.observer) opts.observer(out.reports.back(), out.history);
    }
    return out;
}

}  // namespace gsavbq
