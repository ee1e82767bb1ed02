#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gsavbq::verify {

/// Constants of the two BDF(k) factorizations.
///
/// Test-function identity for D^k against delta^{k+1}:
///   <D^k v^{n+1}, d^{k+1} v^{n+1}> = a (|v^{n+1}|^2 - |v^n|^2)
///       + |b v^{n+1} - c v^n|^2 - |b v^n - c v^{n-1}|^2
///       + d |v^{n+1} - 2 v^n + v^{n-1}|^2 + 2 |v^{n+1} - v^n|^2
/// and for the extrapolations:
///   <d^k v^{n+1}, d^{k+1} v^{n+1}> = ahat |d^{k+1} v^{n+1}|^2 + bhat |v^{n+1} + v^n|^2
///       + (dhat + fhat) |v^{n+1}|^2 - dhat |v^n|^2
struct FactorizationConstants {
    double k = 0.0;
    double epsilon = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double ahat = 0.0;
    double bhat = 0.0;
    double dhat = 0.0;
    double fhat = 0.0;
};

/// Throws std::invalid_argument for k < 1/2 or epsilon < 0.
FactorizationConstants constants_for(double k, double epsilon);

/// Both sides of a factorization check. `residual` is |lhs - rhs| divided by
/// max(1, scale), where scale sums the magnitudes of all terms; `slack` is
/// lhs minus the inequality right-hand side (the equality with its
/// non-negative tail dropped).
struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rhs_inequality = 0.0;
    double scale = 0.0;
    double residual = 0.0;
    double slack = 0.0;
};

/// Vectors are levels n+1, n, n-1 of a sequence in R^m (m = span length).
IdentityCheck check_bdf_factorization_equality(double k, std::span<const double> next,
                                               std::span<const double> cur,
                                               std::span<const double> prev);
IdentityCheck check_bdf_factorization_equality(double k, double next, double cur, double prev);

IdentityCheck check_extrap_factorization_equality(double k, double epsilon,
                                                  std::span<const double> next,
                                                  std::span<const double> cur);
IdentityCheck check_extrap_factorization_equality(double k, double epsilon, double next,
                                                  double cur);

struct SampleSummary {
    double k = 0.0;
    double epsilon = 0.0;
    std::size_t samples = 0;
    double max_residual_bdf = 0.0;
    double max_residual_extrap = 0.0;
    double min_slack_bdf = 0.0;
    double min_slack_extrap = 0.0;
    double ahat = 0.0;
};

/// Uniform samples in [-1,1]^(3*dim) from a seeded mt19937_64.
SampleSummary sample_identities(double k, double epsilon, std::size_t samples, std::uint64_t seed,
                                std::size_t dim = 1);

/// Truncation sums for a scalar function v with derivative dv:
///   S_zeta = sum_{n=0}^{N-1} |d^k v^{n+1} - v^{n+k}|^2
///   S_xi   = sum_{n=1}^{N-1} |D^k v^{n+1} - 2 tau v'(t^{n+k})|^2
struct ConsistencyLevel {
    double tau = 0.0;
    double s_zeta = 0.0;
    double s_xi = 0.0;
};

struct ConsistencyOrders {
    std::vector<ConsistencyLevel> levels;
    std::vector<double> zeta_ratio_log2;  ///< log2(S(tau_{i-1}) / S(tau_i)), i >= 1
    std::vector<double> xi_ratio_log2;
    double zeta_fit = 0.0;  ///< least-squares slope of log S vs log tau
    double xi_fit = 0.0;
    bool zeta_identically_zero = false;  ///< every S_zeta is exactly 0
};

ConsistencyOrders consistency_orders(const std::function<double(double)>& v,
                                     const std::function<double(double)>& dv, double k, double T,
                                     std::span<const double> taus);

}  // namespace gsavbq::verify
