#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsavbq/problem.hpp"
#include "gsavbq/stepper.hpp"

namespace gsavbq {

/// sqrt(sum_n tau |e^n|^2) from the per-step spatial norms |e^n|.
double error_norm_l2t_l2x(std::span<const double> step_norms, double tau);

/// Running L2(0,T; L2) accumulator.
class ErrorAccumulator {
public:
    explicit ErrorAccumulator(double tau) : tau_(tau) {}
    void add(double step_norm) noexcept { sum_ += tau_ * step_norm * step_norm; }
    [[nodiscard]] double value() const noexcept;

private:
    double tau_;
    double sum_ = 0.0;
};

struct ErrorRow {
    int i = 0;
    double tau = 0.0;
    double error_ubar = 0.0;
    double error_u = 0.0;
    double error_p = 0.0;
    double error_theta = 0.0;
    double ratio_ubar = 0.0;  ///< error_{i-1} / error_i; NaN on the first row
    double ratio_u = 0.0;
    double ratio_p = 0.0;
    double ratio_theta = 0.0;
    double max_one_minus_eta = 0.0;
    bool diverged = false;
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    /// Rewrites every ratio column from the stored errors.
    void recompute_ratios();
    [[nodiscard]] std::string meta(const std::string& key) const;
};

/// Errors of one run against the exact solution, summed over levels 1..N.
struct RunErrors {
    double ubar = 0.0;
    double u = 0.0;
    double p = 0.0;
    double theta = 0.0;
    double max_one_minus_eta = 0.0;
    bool diverged = false;
};

/// Requires spec.exact. Pressure errors use the mean-zero exact pressure.
RunErrors measure_run_errors(const ProblemSpec& spec, const SchemeParams& params, double tau,
                             BootstrapMode bootstrap = BootstrapMode::Exact);

struct StudyOptions {
    int refinements = 5;
    int tau_exponent = 4;  ///< tau_i = T / 2^(i + tau_exponent)
    BootstrapMode bootstrap = BootstrapMode::Exact;
    /// At i = 0 the spatial error is estimated from an h vs h/2 pair; when it
    /// exceeds gate_fraction of any i = 0 error the grid is refined once.
    bool spatial_gate = true;
    double gate_fraction = 0.1;
};

/// Same domain with 2(n-1)+1 nodes per direction.
Grid refine_grid(const Grid& g);

/// Spatial error estimate (4/3)|x_h - x_{h/2}| in L2(0,T; L2) for each
/// variable at time step tau, sampled on the coarse nodes.
RunErrors estimate_spatial_error(const ProblemSpec& spec, const SchemeParams& params, double tau,
                                 BootstrapMode bootstrap = BootstrapMode::Exact);

ErrorTable run_convergence_study(const ProblemSpec& spec, const SchemeParams& params,
                                 const StudyOptions& opts = {});

/// Temporal errors against a reference run on the same grid with step
/// tau_{R-1} / ref_factor, where R = opts.refinements. Removes the spatial
/// error from the comparison; the exact solution is only used for the
/// bootstrap. Uses the same table layout, with metadata "reference" = "self".
ErrorTable run_self_convergence_study(const ProblemSpec& spec, const SchemeParams& params,
                                      const StudyOptions& opts = {}, int ref_factor = 8);

}  // namespace gsavbq
