#include "gsavbq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gsavbq/operators.hpp"

namespace gsavbq::verify {

FactorizationConstants constants_for(double k, double epsilon) {
    if (!(k >= 0.5)) throw std::invalid_argument("constants_for: k must be >= 1/2");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("constants_for: epsilon must be >= 0");
    FactorizationConstants f;
    f.k = k;
    f.epsilon = epsilon;
    f.a = 3.0 / (2.0 * (k + 1.0));
    // c^2 = k^2 + k/2 - 1/2 = (k - 1/2)(k + 1) and k^2 + 3k/2 - 1 = (k - 1/2)(k + 2);
    // the factored forms stay finite at k = 1/2 where c = 0.
    f.c = std::sqrt((k - 0.5) * (k + 1.0));
    f.b = std::sqrt(k - 0.5) * (k + 2.0) / std::sqrt(k + 1.0);
    f.d = (k - 0.5) * (k + 1.0);
    const double q = (2.0 * k + 1.0) * (2.0 * k + 1.0);
    f.ahat = (4.0 * k * k - 1.0 - epsilon) / q;
    f.bhat = (k + 0.5 - epsilon * k * (k + 1.0)) / q;
    f.dhat = (k + 0.5 - epsilon * k) / (2.0 * k + 1.0);
    f.fhat = epsilon;
    return f;
}

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("sequence levels differ in length");
}

}  // namespace

IdentityCheck check_bdf_factorization_equality(double k, std::span<const double> next,
                                               std::span<const double> cur,
                                               std::span<const double> prev) {
    require_same_length(next, cur);
    require_same_length(next, prev);
    const FactorizationConstants f = constants_for(k, 0.0);

    double lhs = 0.0;
    double n1 = 0.0, n0 = 0.0, bc_new = 0.0, bc_old = 0.0, second = 0.0, first = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
        const double x = next[i], y = cur[i], z = prev[i];
        lhs += bdf_comb(x, y, z, k) * extrap(x, y, k + 1.0);
        n1 += x * x;
        n0 += y * y;
        bc_new += (f.b * x - f.c * y) * (f.b * x - f.c * y);
        bc_old += (f.b * y - f.c * z) * (f.b * y - f.c * z);
        second += (x - 2.0 * y + z) * (x - 2.0 * y + z);
        first += (x - y) * (x - y);
    }
    IdentityCheck out;
    out.lhs = lhs;
    out.rhs_inequality = f.a * (n1 - n0) + bc_new - bc_old;
    out.rhs = out.rhs_inequality + f.d * second + 2.0 * first;
    out.scale = std::abs(lhs) + f.a * (n1 + n0) + bc_new + bc_old + f.d * second + 2.0 * first;
    out.residual = std::abs(out.lhs - out.rhs) / std::max(1.0, out.scale);
    out.slack = out.lhs - out.rhs_inequality;
    return out;
}

IdentityCheck check_bdf_factorization_equality(double k, double next, double cur, double prev) {
    return check_bdf_factorization_equality(k, std::span<const double>(&next, 1),
                                            std::span<const double>(&cur, 1),
                                            std::span<const double>(&prev, 1));
}

IdentityCheck check_extrap_factorization_equality(double k, double epsilon,
                                                  std::span<const double> next,
                                                  std::span<const double> cur) {
    require_same_length(next, cur);
    const FactorizationConstants f = constants_for(k, epsilon);

    double lhs = 0.0, ext = 0.0, sum = 0.0, n1 = 0.0, n0 = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
        const double x = next[i], y = cur[i];
        const double e = extrap(x, y, k + 1.0);
        lhs += extrap(x, y, k) * e;
        ext += e * e;
        sum += (x + y) * (x + y);
        n1 += x * x;
        n0 += y * y;
    }
    IdentityCheck out;
    out.lhs = lhs;
    out.rhs_inequality = f.ahat * ext + (f.dhat + f.fhat) * n1 - f.dhat * n0;
    out.rhs = out.rhs_inequality + f.bhat * sum;
    out.scale = std::abs(lhs) + std::abs(f.ahat) * ext + std::abs(f.bhat) * sum +
                (std::abs(f.dhat) + f.fhat) * n1 + std::abs(f.dhat) * n0;
    out.residual = std::abs(out.lhs - out.rhs) / std::max(1.0, out.scale);
    out.slack = out.lhs - out.rhs_inequality;
    return out;
}

IdentityCheck check_extrap_factorization_equality(double k, double epsilon, double next,
                                                  double cur) {
    return check_extrap_factorization_equality(k, epsilon, std::span<const double>(&next, 1),
                                               std::span<const double>(&cur, 1));
}

SampleSummary sample_identities(double k, double epsilon, std::size_t samples, std::uint64_t seed,
                                std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("sample_identities: dim must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> x(dim), y(dim), z(dim);

    SampleSummary s;
    s.k = k;
    s.epsilon = epsilon;
    s.samples = samples;
    s.ahat = constants_for(k, epsilon).ahat;
    s.min_slack_bdf = std::numeric_limits<double>::infinity();
    s.min_slack_extrap = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t i = 0; i < dim; ++i) {
            x[i] = unif(rng);
            y[i] = unif(rng);
            z[i] = unif(rng);
        }
        const IdentityCheck d = check_bdf_factorization_equality(k, x, y, z);
        const IdentityCheck e = check_extrap_factorization_equality(k, epsilon, x, y);
        s.max_residual_bdf = std::max(s.max_residual_bdf, d.residual);
        s.max_residual_extrap = std::max(s.max_residual_extrap, e.residual);
        s.min_slack_bdf = std::min(s.min_slack_bdf, d.slack);
        s.min_slack_extrap = std::min(s.min_slack_extrap, e.slack);
    }
    return s;
}

namespace {

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ConsistencyOrders consistency_orders(const std::function<double(double)>& v,
                                     const std::function<double(double)>& dv, double k, double T,
                                     std::span<const double> taus) {
    if (!(k >= 1.0)) throw std::invalid_argument("consistency_orders: k must be >= 1");
    ConsistencyOrders out;
    for (double tau : taus) {
        const int N = static_cast<int>(std::lround(T / tau));
        ConsistencyLevel lv;
        lv.tau = tau;
        for (int n = 0; n < N; ++n) {
            const double z = extrap(v((n + 1) * tau), v(n * tau), k) - v((n + k) * tau);
            lv.s_zeta += z * z;
        }
        for (int n = 1; n < N; ++n) {
            const double x = bdf_comb(v((n + 1) * tau), v(n * tau), v((n - 1) * tau), k) -
                             2.0 * tau * dv((n + k) * tau);
            lv.s_xi += x * x;
        }
        out.levels.push_back(lv);
    }

    out.zeta_identically_zero = std::all_of(out.levels.begin(), out.levels.end(),
                                            [](const ConsistencyLevel& l) { return l.s_zeta == 0.0; });
    std::vector<double> lt, lz, lx;
    for (std::size_t i = 0; i < out.levels.size(); ++i) {
        const auto& l = out.levels[i];
        lt.push_back(std::log(l.tau));
        lz.push_back(std::log(l.s_zeta));
        lx.push_back(std::log(l.s_xi));
        if (i > 0) {
            const auto& p = out.levels[i - 1];
            out.zeta_ratio_log2.push_back(std::log2(p.s_zeta / l.s_zeta));
            out.xi_ratio_log2.push_back(std::log2(p.s_xi / l.s_xi));
        }
    }
    if (out.levels.size() >= 2) {
        out.zeta_fit = out.zeta_identically_zero ? std::numeric_limits<double>::quiet_NaN()
                                                 : ls_slope(lt, lz);
        out.xi_fit = ls_slope(lt, lx);
    }
    return out;
}

}  // namespace gsavbq::verify
