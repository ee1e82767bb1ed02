#include "gsavbq/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <fstream>
#include <limits>
#include <numbers>
#include <vector>

#include "gsavbq/config.hpp"
#include "gsavbq/io.hpp"
#include "gsavbq/problems.hpp"
#include "gsavbq/study.hpp"
#include "gsavbq/verify.hpp"

namespace gsavbq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverged = 2;

int simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ProblemSpec spec = build_spec(cfg);
    const SchemeParams scheme = build_scheme(cfg);
    RunOptions opts = build_run_options(cfg);
    const std::filesystem::path dir = cfg.out_dir;

    int snapshots = 0;
    opts.observer = [&](const StepReport& rep, const History& h) {
        if (cfg.snapshot_every > 0 && rep.n % cfg.snapshot_every == 0) {
            write_vtk(dir / ("snapshot_" + std::to_string(rep.n) + ".vtk"), h.theta.cur, h.u.cur,
                      h.p.cur);
            ++snapshots;
        }
    };
    const RunResult res = run(spec, scheme, opts);

    write_csv(dir / "series.csv", res.reports);
    write_vtk(dir / "final.vtk", res.history.theta.cur, res.history.u.cur, res.history.p.cur);
    std::ofstream(dir / "config.ini") << serialize_config(cfg);

    const StepReport& last = res.reports.back();
    out << spec.name << ": " << res.reports.size() - 1 << " steps, t = " << format_double(last.t)
        << ", E = " << format_double(last.energy) << ", r = " << format_double(last.r)
        << ", xi = " << format_double(last.xi) << ", wrote " << dir.string() << '\n';
    if (res.diverged) {
        err << "diverged at step " << res.diverged_step << ": " << res.message << '\n';
        return kExitDiverged;
    }
    return kExitOk;
}

int converge(int refinements, int n, double k, double l, bool gate, bool self_ref,
             const std::string& out_dir, std::ostream& out) {
    const ProblemSpec spec = manufactured_spec(n);
    SchemeParams scheme;
    scheme.bdf.k = k;
    scheme.bdf.l = l;
    scheme.bdf.validate();
    StudyOptions opts;
    opts.refinements = refinements;
    opts.spatial_gate = gate;
    const ErrorTable table = self_ref ? run_self_convergence_study(spec, scheme, opts)
                                      : run_convergence_study(spec, scheme, opts);
    write_csv(out, table);
    if (!out_dir.empty()) write_csv(std::filesystem::path(out_dir) / "errors.csv", table);
    for (const ErrorRow& r : table.rows)
        if (r.diverged) return kExitDiverged;
    return kExitOk;
}

int verify_cmd(std::size_t samples, std::uint64_t seed, std::ostream& out) {
    const std::vector<double> ks = {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 7.5};
    std::vector<double> taus;
    for (int i = 0; i < 5; ++i) taus.push_back(std::numbers::pi / (16.0 * std::ldexp(1.0, i)));
    const auto sin_fn = [](double t) { return std::sin(t); };
    const auto cos_fn = [](double t) { return std::cos(t); };

    out << "# seed = " << seed << "\n# samples = " << samples << '\n';
    out << "k,epsilon,max_residual_bdf,max_residual_extrap,min_slack_bdf,min_slack_extrap,ahat,"
           "order_zeta,order_xi\n";
    for (double k : ks) {
        double oz = std::numeric_limits<double>::quiet_NaN();
        double ox = oz;
        if (k >= 1.0) {
            const auto orders = verify::consistency_orders(sin_fn, cos_fn, k, std::numbers::pi, taus);
            oz = orders.zeta_fit;
            ox = orders.xi_fit;
        }
        for (double eps : {0.0, 1.0 / (k * k)}) {
            const auto s = verify::sample_identities(k, eps, samples, seed);
            out << format_double(k) << ',' << format_double(eps) << ','
                << format_double(s.max_residual_bdf) << ',' << format_double(s.max_residual_extrap)
                << ',' << format_double(s.min_slack_bdf) << ',' << format_double(s.min_slack_extrap)
                << ',' << format_double(s.ahat) << ',' << format_double(oz) << ','
                << format_double(ox) << '\n';
        }
    }
    return kExitOk;
}

struct BenchFlags {
    int nx = 0;
    int ny = 0;
    double tau = 0.0;
    double T = 0.0;
    double k = 3.0;
    double l = 1.0;
    std::string stab;
    double cs = 0.5;
    std::string out;
};

CLI::App* add_bench(CLI::App& app, const char* name, const char* desc, BenchFlags& f) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--nx", f.nx, "nodes in x (including boundary)")->check(CLI::Range(3, 1 << 16));
    sub->add_option("--ny", f.ny, "nodes in y (including boundary)")->check(CLI::Range(3, 1 << 16));
    sub->add_option("--tau", f.tau, "time step")->check(CLI::PositiveNumber);
    sub->add_option("--T", f.T, "end time")->check(CLI::PositiveNumber);
    sub->add_option("--k", f.k, "velocity extrapolation width")->check(CLI::Range(1.0, 1e6));
    sub->add_option("--l", f.l, "temperature extrapolation width")->check(CLI::Range(1.0, 1e6));
    sub->add_option("--stab", f.stab, "spatial stabilization")
        ->check(CLI::IsMember({"none", "sa", "sb"}));
    sub->add_option("--cs", f.cs, "stabilization constant")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", f.out, "output directory");
    return sub;
}

RunConfig bench_config(const std::string& problem, const BenchFlags& f) {
    RunConfig c = default_config(problem);
    if (f.nx) c.nx = f.nx;
    if (f.ny) c.ny = f.ny;
    if (problem == "shear" && f.nx && !f.ny) c.ny = f.nx;
    if (f.tau > 0) c.tau = f.tau;
    if (f.T > 0) c.T = f.T;
    c.k = f.k;
    c.l = f.l;
    if (!f.stab.empty()) c.stab = f.stab;
    c.cs = f.cs;
    c.out_dir = f.out.empty() ? "out/" + problem : f.out;
    return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"GSAV-BDF(k) consistent-splitting solver for 2D Boussinesq flow", "gsavbq"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "run a problem described by a config file");
    run_cmd->add_option("config", config_path, "INI config file")->required();

    int refinements = 5;
    int conv_n = 129;
    double conv_k = 3.0, conv_l = 1.0;
    bool no_gate = false;
    bool self_ref = false;
    std::string conv_out;
    CLI::App* conv_cmd = app.add_subcommand("converge", "manufactured-solution time convergence study");
    conv_cmd->add_option("--refinements", refinements, "number of tau halvings")
        ->check(CLI::Range(1, 12));
    conv_cmd->add_option("--n", conv_n, "nodes per direction")->check(CLI::Range(3, 1 << 14));
    conv_cmd->add_option("--k", conv_k, "velocity extrapolation width")->check(CLI::Range(1.0, 1e6));
    conv_cmd->add_option("--l", conv_l, "temperature extrapolation width")->check(CLI::Range(1.0, 1e6));
    conv_cmd->add_flag("--no-gate", no_gate, "skip the spatial-error gate");
    conv_cmd->add_flag("--self", self_ref, "measure against a fine-step reference on the same grid");
    conv_cmd->add_option("--out", conv_out, "directory for errors.csv");

    BenchFlags marsigli_flags, shear_flags;
    CLI::App* marsigli_cmd = add_bench(app, "marsigli", "lock-exchange benchmark", marsigli_flags);
    CLI::App* shear_cmd = add_bench(app, "shear", "double shear layer benchmark", shear_flags);

    std::size_t samples = 10000;
    std::uint64_t seed = 20240607;
    CLI::App* verify_sub = app.add_subcommand("verify", "check the BDF(k) factorization identities");
    verify_sub->add_option("--samples", samples, "random samples per (k, epsilon)");
    verify_sub->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) return simulate(load_config(config_path), out, err);
        if (*conv_cmd) return converge(refinements, conv_n, conv_k, conv_l, !no_gate, self_ref,
                                              conv_out, out);
        if (*marsigli_cmd) return simulate(bench_config("marsigli", marsigli_flags), out, err);
        if (*shear_cmd) return simulate(bench_config("shear", shear_flags), out, err);
        if (*verify_sub) return verify_cmd(samples, seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gsavbq
