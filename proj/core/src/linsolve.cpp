#include "gsavbq/linsolve.hpp"

#include <cmath>
#include <vector>

namespace gsavbq {

namespace {

// Matrix-free sigma I - c Lap on a fixed grid. Inactive (Dirichlet boundary)
// nodes are pinned to zero and excluded from every reduction.
class ShiftedLaplacian {
public:
    ShiftedLaplacian(const Grid& g, Bc bc, double sigma, double c)
        : g_(g), bc_(bc), sigma_(sigma), c_(c), w_(g.size()) {
        const int nx = g.nx();
        const int ny = g.ny();
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const bool active = bc == Bc::NeumannZero || g.is_interior(i, j);
                // weights without the hx*hy factor; it cancels in every ratio
                const double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
                const double wy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
                w_[g.index(i, j)] = active ? wx * wy : 0.0;
            }
        const double ix2 = 1.0 / (g.hx() * g.hx());
        const double iy2 = 1.0 / (g.hy() * g.hy());
        diag_ = sigma + 2.0 * c * (ix2 + iy2);
    }

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const int nx = g_.nx();
        const int ny = g_.ny();
        const double ix2 = 1.0 / (g_.hx() * g_.hx());
        const double iy2 = 1.0 / (g_.hy() * g_.hy());
        if (bc_ == Bc::DirichletZero) {
            for (int i = 0; i < nx; ++i) {
                y[g_.index(i, 0)] = 0.0;
                y[g_.index(i, ny - 1)] = 0.0;
            }
            for (int j = 1; j < ny - 1; ++j) {
                y[g_.index(0, j)] = 0.0;
                y[g_.index(nx - 1, j)] = 0.0;
                const double* xr = &x[g_.index(0, j)];
                const double* xd = xr - nx;
                const double* xu = xr + nx;
                double* yr = &y[g_.index(0, j)];
                for (int i = 1; i < nx - 1; ++i) {
                    const double lap = (xr[i - 1] - 2.0 * xr[i] + xr[i + 1]) * ix2 +
                                       (xd[i] - 2.0 * xr[i] + xu[i]) * iy2;
                    yr[i] = sigma_ * xr[i] - c_ * lap;
                }
            }
            return;
        }
        for (int j = 0; j < ny; ++j) {
            const int jm = j == 0 ? 1 : j - 1;
            const int jp = j == ny - 1 ? ny - 2 : j + 1;
            const double* xr = &x[g_.index(0, j)];
            const double* xd = &x[g_.index(0, jm)];
            const double* xu = &x[g_.index(0, jp)];
            double* yr = &y[g_.index(0, j)];
            for (int i = 0; i < nx; ++i) {
                const int im = i == 0 ? 1 : i - 1;
                const int ip = i == nx - 1 ? nx - 2 : i + 1;
                const double lap = (xr[im] - 2.0 * xr[i] + xr[ip]) * ix2 +
                                   (xd[i] - 2.0 * xr[i] + xu[i]) * iy2;
                yr[i] = sigma_ * xr[i] - c_ * lap;
            }
        }
    }

    [[nodiscard]] double dot(const std::vector<double>& a, const std::vector<double>& b) const {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += w_[k] * a[k] * b[k];
        return s;
    }

    void project_mean_zero(std::vector<double>& v) const {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            num += w_[k] * v[k];
            den += w_[k];
        }
        const double m = num / den;
        for (double& x : v) x -= m;
    }

    void project_null(std::vector<double>& v) const { project_mean_zero(v); }
    [[nodiscard]] bool active(std::size_t k) const { return w_[k] > 0.0; }
    [[nodiscard]] double inv_diag(std::size_t) const { return 1.0 / diag_; }

private:
    Grid g_;
    Bc bc_;
    double sigma_;
    double c_;
    double diag_ = 1.0;
    std::vector<double> w_;
};

template <typename Op>
ScalarSolve pcg(const Op& A, const ScalarField& rhs, const SolverOptions& opts,
                const ScalarField* guess, bool singular) {
    const Grid& g = rhs.grid();
    const std::size_t n = g.size();
    const int max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * g.nx() * g.ny();

    std::vector<double> b(rhs.values().begin(), rhs.values().end());
    for (std::size_t k = 0; k < n; ++k)
        if (!A.active(k)) b[k] = 0.0;
    const double b_raw = std::sqrt(A.dot(b, b));
    if (singular) A.project_null(b);
    const double bnorm = std::sqrt(A.dot(b, b));

    ScalarSolve out{ScalarField(g, rhs.bc()), {}};
    if (bnorm == 0.0 || (singular && bnorm <= 1e-14 * b_raw)) {
        out.stats.converged = true;
        return out;
    }

    std::vector<double> x(n, 0.0);
    if (guess != nullptr) {
        require_same_grid(g, guess->grid());
        for (std::size_t k = 0; k < n; ++k) x[k] = A.active(k) ? (*guess)[k] : 0.0;
        if (singular) A.project_null(x);
    }

    std::vector<double> r(n), z(n), p(n), q(n);
    A.apply(x, q);
    for (std::size_t k = 0; k < n; ++k) r[k] = A.active(k) ? b[k] - q[k] : 0.0;

    double rnorm = std::sqrt(A.dot(r, r));
    int it = 0;
    if (rnorm > opts.rtol * bnorm) {
        for (std::size_t k = 0; k < n; ++k) z[k] = r[k] * A.inv_diag(k);
        p = z;
        double rz = A.dot(r, z);
        while (it < max_iter) {
            ++it;
            A.apply(p, q);
            const double alpha = rz / A.dot(p, q);
            for (std::size_t k = 0; k < n; ++k) {
                x[k] += alpha * p[k];
                r[k] -= alpha * q[k];
            }
            if (singular && opts.reproject_every > 0 && it % opts.reproject_every == 0)
                A.project_null(x);
            rnorm = std::sqrt(A.dot(r, r));
            if (rnorm <= opts.rtol * bnorm) break;
            for (std::size_t k = 0; k < n; ++k) z[k] = r[k] * A.inv_diag(k);
            const double rz_new = A.dot(r, z);
            const double beta = rz_new / rz;
            rz = rz_new;
            for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
        }
    }
    if (singular) A.project_null(x);

    // report the true residual rather than the recursively updated one
    A.apply(x, q);
    for (std::size_t k = 0; k < n; ++k) r[k] = A.active(k) ? b[k] - q[k] : 0.0;
    out.stats.iterations = it;
    out.stats.final_residual = std::sqrt(A.dot(r, r)) / bnorm;
    out.stats.converged = out.stats.final_residual <= opts.rtol * (1.0 + 1e-6) ||
                          rnorm <= opts.rtol * bnorm;
    if (!out.stats.converged || !std::isfinite(out.stats.final_residual))
        throw SolveError("CG did not converge after " + std::to_string(it) +
                             " iterations (relative residual " +
                             std::to_string(out.stats.final_residual) + ")",
                         out.stats);

    std::copy(x.begin(), x.end(), out.x.values().begin());
    out.x.enforce_bc();
    return out;
}

}  // namespace

ScalarSolve solve_shifted(double sigma, double c, const ScalarField& rhs, const SolverOptions& opts,
                          const ScalarField* guess) {
    if (!(sigma > 0.0)) throw std::invalid_argument("solve_shifted: sigma must be positive");
    if (!(c >= 0.0)) throw std::invalid_argument("solve_shifted: c must be non-negative");
    if (c == 0.0) {
        // diagonal system
        ScalarSolve out{rhs, {1, 0.0, true}};
        for (double& v : out.x.values()) v /= sigma;
        out.x.enforce_bc();
        return out;
    }
    const ShiftedLaplacian A(rhs.grid(), rhs.bc(), sigma, c);
    return pcg(A, rhs, opts, guess, false);
}

ScalarSolve solve_poisson_neumann(const ScalarField& rhs, const SolverOptions& opts,
                                  const ScalarField* guess) {
    const ShiftedLaplacian A(rhs.grid(), Bc::NeumannZero, 0.0, 1.0);
    ScalarField neumann_rhs = rhs;
    neumann_rhs.set_bc(Bc::NeumannZero);
    return pcg(A, neumann_rhs, opts, guess, true);
}

}  // namespace gsavbq

