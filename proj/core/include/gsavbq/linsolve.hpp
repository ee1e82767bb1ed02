#pragma once

#include <stdexcept>
#include <string>

#include "gsavbq/grid.hpp"

namespace gsavbq {

struct SolveStats {
    int iterations = 0;
    double final_residual = 0.0;  ///< relative, discrete L2
    bool converged = false;
};

struct SolverOptions {
    double rtol = 1e-10;
    int max_iter = 0;          ///< 0 selects 10 * nx * ny
    int reproject_every = 50;  ///< Neumann nullspace clean-up period
};

/// Raised when CG exhausts its iteration budget.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, SolveStats stats)
        : std::runtime_error(what), stats_(stats) {}
    [[nodiscard]] const SolveStats& stats() const noexcept { return stats_; }

private:
    SolveStats stats_;
};

struct ScalarSolve {
    ScalarField x;
    SolveStats stats;
};

/// Solves (sigma I - c Lap) x = rhs with Jacobi-preconditioned CG in the
/// trapezoidal inner product. The boundary treatment follows rhs.bc():
/// DirichletZero solves for interior nodes only, NeumannZero uses the
/// mirrored-ghost Laplacian on all nodes.
ScalarSolve solve_shifted(double sigma, double c, const ScalarField& rhs,
                          const SolverOptions& opts = {}, const ScalarField* guess = nullptr);

/// Solves -Lap x = rhs with homogeneous Neumann conditions. The rhs is
/// projected onto mean-zero fields first and the returned x has zero mean.
ScalarSolve solve_poisson_neumann(const ScalarField& rhs, const SolverOptions& opts = {},
                                  const ScalarField* guess = nullptr);

}  // namespace gsavbq
