#include "gsavbq/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gsavbq {

double error_norm_l2t_l2x(std::span<const double> step_norms, double tau) {
    ErrorAccumulator acc(tau);
    for (double e : step_norms) acc.add(e);
    return acc.value();
}

double ErrorAccumulator::value() const noexcept { return std::sqrt(sum_); }

void ErrorTable::recompute_ratios() {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t n = 0; n < rows.size(); ++n) {
        ErrorRow& r = rows[n];
        if (n == 0) {
            r.ratio_ubar = r.ratio_u = r.ratio_p = r.ratio_theta = nan;
            continue;
        }
        const ErrorRow& q = rows[n - 1];
        r.ratio_ubar = q.error_ubar / r.error_ubar;
        r.ratio_u = q.error_u / r.error_u;
        r.ratio_p = q.error_p / r.error_p;
        r.ratio_theta = q.error_theta / r.error_theta;
    }
}

std::string ErrorTable::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return v;
    return {};
}

RunErrors measure_run_errors(const ProblemSpec& spec, const SchemeParams& params, double tau,
                             BootstrapMode bootstrap) {
    if (!spec.exact) throw std::invalid_argument("measure_run_errors: spec has no exact solution");
    ErrorAccumulator eubar(tau), eu(tau), ep(tau), eth(tau);
    double max_eta = 0.0;

    RunOptions ro;
    ro.tau = tau;
    ro.T = spec.T;
    ro.bootstrap = bootstrap;
    ro.observer = [&](const StepReport& rep, const History& h) {
        max_eta = std::max(max_eta, std::abs(1.0 - rep.eta));
        if (rep.n == 0) return;
        const double t = rep.t;
        const VectorField u_ex = exact_velocity(spec, t);
        eubar.add(norm_l2(h.u_bar.cur - u_ex));
        eu.add(norm_l2(h.u.cur - u_ex));
        ep.add(norm_l2(mean_zero_project(h.p.cur) - exact_pressure(spec, t)));
        eth.add(norm_l2(h.theta.cur - exact_theta(spec, t)));
    };
    const RunResult res = run(spec, params, ro);

    RunErrors out;
    out.diverged = res.diverged;
    if (res.diverged) {
        const double inf = std::numeric_limits<double>::infinity();
        out.ubar = out.u = out.p = out.theta = inf;
    } else {
        out.ubar = eubar.value();
        out.u = eu.value();
        out.p = ep.value();
        out.theta = eth.value();
    }
    out.max_one_minus_eta = max_eta;
    return out;
}

Grid refine_grid(const Grid& g) {
    return Grid(g.x0(), g.y0(), g.lx(), g.ly(), 2 * (g.nx() - 1) + 1, 2 * (g.ny() - 1) + 1);
}

namespace {

struct Snapshot {
    ScalarField theta;
    VectorField u_bar;
    VectorField u;
    ScalarField p;
};

Snapshot restrict_to(const History& h, const Grid& coarse) {
    const auto inj = [&](const ScalarField& f) {
        ScalarField out(coarse, f.bc());
        for (int j = 0; j < coarse.ny(); ++j)
            for (int i = 0; i < coarse.nx(); ++i) out(i, j) = f(2 * i, 2 * j);
        return out;
    };
    return {inj(h.theta.cur), VectorField(inj(h.u_bar.cur.x), inj(h.u_bar.cur.y)),
            VectorField(inj(h.u.cur.x), inj(h.u.cur.y)), inj(mean_zero_project(h.p.cur))};
}

}  // namespace

RunErrors estimate_spatial_error(const ProblemSpec& spec, const SchemeParams& params, double tau,
                                 BootstrapMode bootstrap) {
    ProblemSpec fine = spec;
    fine.grid = refine_grid(spec.grid);

    std::vector<Snapshot> fine_levels;
    RunOptions ro;
    ro.tau = tau;
    ro.T = spec.T;
    ro.bootstrap = bootstrap;
    ro.observer = [&](const StepReport&, const History& h) {
        fine_levels.push_back(restrict_to(h, spec.grid));
    };
    const RunResult rf = run(fine, params, ro);

    ErrorAccumulator eubar(tau), eu(tau), ep(tau), eth(tau);
    std::size_t level = 0;
    ro.observer = [&](const StepReport& rep, const History& h) {
        const std::size_t n = level++;
        if (rep.n == 0 || n >= fine_levels.size()) return;
        const Snapshot& f = fine_levels[n];
        eubar.add(norm_l2(h.u_bar.cur - f.u_bar));
        eu.add(norm_l2(h.u.cur - f.u));
        ep.add(norm_l2(mean_zero_project(h.p.cur) - f.p));
        eth.add(norm_l2(h.theta.cur - f.theta));
    };
    const RunResult rc = run(spec, params, ro);

    RunErrors out;
    out.diverged = rf.diverged || rc.diverged;
    constexpr double richardson = 4.0 / 3.0;
    out.ubar = richardson * eubar.value();
    out.u = richardson * eu.value();
    out.p = richardson * ep.value();
    out.theta = richardson * eth.value();
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool gate_fails(const RunErrors& spatial, const RunErrors& e0, double fraction) {
    return spatial.ubar > fraction * e0.ubar || spatial.u > fraction * e0.u ||
           spatial.p > fraction * e0.p || spatial.theta > fraction * e0.theta;
}

}  // namespace

ErrorTable run_convergence_study(const ProblemSpec& spec_in, const SchemeParams& params,
                                 const StudyOptions& opts) {
    if (!spec_in.exact)
        throw std::invalid_argument("run_convergence_study: spec has no exact solution");
    if (opts.refinements < 1)
        throw std::invalid_argument("run_convergence_study: refinements must be >= 1");

    ProblemSpec spec = spec_in;
    const auto tau_of = [&](int i) { return spec.T / std::ldexp(1.0, i + opts.tau_exponent); };

    ErrorTable table;
    RunErrors first = measure_run_errors(spec, params, tau_of(0), opts.bootstrap);
    int doublings = 0;
    if (opts.spatial_gate) {
        RunErrors spatial = estimate_spatial_error(spec, params, tau_of(0), opts.bootstrap);
        table.metadata.emplace_back("spatial_theta", fmt(spatial.theta));
        table.metadata.emplace_back("spatial_ubar", fmt(spatial.ubar));
        table.metadata.emplace_back("spatial_p", fmt(spatial.p));
        if (gate_fails(spatial, first, opts.gate_fraction)) {
            spec.grid = refine_grid(spec.grid);
            ++doublings;
            first = measure_run_errors(spec, params, tau_of(0), opts.bootstrap);
        }
    }
    table.metadata.emplace_back("problem", spec.name);
    table.metadata.emplace_back("nx", std::to_string(spec.grid.nx()));
    table.metadata.emplace_back("ny", std::to_string(spec.grid.ny()));
    table.metadata.emplace_back("grid_doublings", std::to_string(doublings));
    table.metadata.emplace_back("nu", fmt(spec.nu));
    table.metadata.emplace_back("kappa", fmt(spec.kappa));
    table.metadata.emplace_back("k", fmt(params.bdf.k));
    table.metadata.emplace_back("l", fmt(params.bdf.l));
    table.metadata.emplace_back("T", fmt(spec.T));

    for (int i = 0; i < opts.refinements; ++i) {
        const double tau = tau_of(i);
        const RunErrors e = i == 0 ? first : measure_run_errors(spec, params, tau, opts.bootstrap);
        ErrorRow row;
        row.i = i;
        row.tau = tau;
        row.error_ubar = e.ubar;
        row.error_u = e.u;
        row.error_p = e.p;
        row.error_theta = e.theta;
        row.max_one_minus_eta = e.max_one_minus_eta;
        row.diverged = e.diverged;
        table.rows.push_back(row);
    }
    table.recompute_ratios();
    return table;
}

ErrorTable run_self_convergence_study(const ProblemSpec& spec, const SchemeParams& params,
                                      const StudyOptions& opts, int ref_factor) {
    if (opts.refinements < 1)
        throw std::invalid_argument("run_self_convergence_study: refinements must be >= 1");
    if (ref_factor < 2)
        throw std::invalid_argument("run_self_convergence_study: ref_factor must be >= 2");
    const auto tau_of = [&](int i) { return spec.T / std::ldexp(1.0, i + opts.tau_exponent); };
    const int finest_levels = step_count(spec.T, tau_of(opts.refinements - 1));
    const double tau_ref = tau_of(opts.refinements - 1) / ref_factor;

    // reference snapshots on the finest study time grid
    std::vector<Snapshot> ref;
    ref.reserve(static_cast<std::size_t>(finest_levels) + 1);
    RunOptions ro;
    ro.tau = tau_ref;
    ro.T = spec.T;
    ro.bootstrap = opts.bootstrap;
    ro.observer = [&](const StepReport& rep, const History& h) {
        if (rep.n % ref_factor != 0) return;
        if (rep.n == 0) {
            ref.push_back({h.theta.prev, h.u_bar.prev, h.u.prev, mean_zero_project(h.p.prev)});
            return;
        }
        ref.push_back({h.theta.cur, h.u_bar.cur, h.u.cur, mean_zero_project(h.p.cur)});
    };
    const RunResult rr = run(spec, params, ro);
    if (rr.diverged) throw std::runtime_error("reference run diverged: " + rr.message);

    ErrorTable table;
    table.metadata.emplace_back("problem", spec.name);
    table.metadata.emplace_back("reference", "self");
    table.metadata.emplace_back("tau_ref", fmt(tau_ref));
    table.metadata.emplace_back("nx", std::to_string(spec.grid.nx()));
    table.metadata.emplace_back("ny", std::to_string(spec.grid.ny()));
    table.metadata.emplace_back("k", fmt(params.bdf.k));
    table.metadata.emplace_back("l", fmt(params.bdf.l));

    for (int i = 0; i < opts.refinements; ++i) {
        const double tau = tau_of(i);
        const int stride = 1 << (opts.refinements - 1 - i);
        ErrorAccumulator eubar(tau), eu(tau), ep(tau), eth(tau);
        double max_eta = 0.0;
        RunOptions ri;
        ri.tau = tau;
        ri.T = spec.T;
        ri.bootstrap = opts.bootstrap;
        ri.observer = [&](const StepReport& rep, const History& h) {
            max_eta = std::max(max_eta, std::abs(1.0 - rep.eta));
            if (rep.n == 0) return;
            const Snapshot& f = ref.at(static_cast<std::size_t>(rep.n) * stride);
            eubar.add(norm_l2(h.u_bar.cur - f.u_bar));
            eu.add(norm_l2(h.u.cur - f.u));
            ep.add(norm_l2(mean_zero_project(h.p.cur) - f.p));
            eth.add(norm_l2(h.theta.cur - f.theta));
        };
        const RunResult res = run(spec, params, ri);
        ErrorRow row;
        row.i = i;
        row.tau = tau;
        row.diverged = res.diverged;
        const double inf = std::numeric_limits<double>::infinity();
        row.error_ubar = res.diverged ? inf : eubar.value();
        row.error_u = res.diverged ? inf : eu.value();
        row.error_p = res.diverged ? inf : ep.value();
        row.error_theta = res.diverged ? inf : eth.value();
        row.max_one_minus_eta = max_eta;
        table.rows.push_back(row);
    }
    table.recompute_ratios();
    return table;
}

}  // namespace gsavbq
