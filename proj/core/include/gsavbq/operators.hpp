#pragma once

#include "gsavbq/grid.hpp"

namespace gsavbq {

/// Extrapolation widths of the BDF(k) family: k for the velocity, l for the
/// temperature. Both are real-valued.
struct BdfParams {
    double k = 3.0;
    double l = 1.0;

    /// Throws std::invalid_argument unless k >= 1 and l >= 1.
    void validate() const;
    /// The second-order error estimate is only established for k >= 3.
    [[nodiscard]] bool in_error_theory_regime() const noexcept { return k >= 3.0 && l >= 1.0; }
};

// D^k v^{n+1} = (2k+1) v^{n+1} - 4k v^n + (2k-1) v^{n-1}
ScalarField bdf_comb(const ScalarField& next, const ScalarField& cur, const ScalarField& prev,
                     double k);
VectorField bdf_comb(const VectorField& next, const VectorField& cur, const VectorField& prev,
                     double k);
double bdf_comb(double next, double cur, double prev, double k) noexcept;

// delta^k v^n = k v^n - (k-1) v^{n-1}
ScalarField extrap(const ScalarField& cur, const ScalarField& prev, double k);
VectorField extrap(const VectorField& cur, const VectorField& prev, double k);
double extrap(double cur, double prev, double k) noexcept;

/// Five-point Laplacian. DirichletZero: interior stencil, boundary output 0.
/// NeumannZero: mirrored ghost nodes, evaluated on every node.
ScalarField laplacian(const ScalarField& a);
VectorField laplacian(const VectorField& a);

/// Central differences inside, one-sided second-order on the boundary.
/// The result is tagged NeumannZero (no boundary values are imposed).
VectorField gradient(const ScalarField& a);
ScalarField divergence(const VectorField& v);

/// Central differences inside and along the boundary; the normal component on
/// boundary nodes uses the first-order one-sided difference (a_1 - a_0)/h, the
/// summation-by-parts closure. Tagged NeumannZero.
VectorField gradient_sbp(const ScalarField& a);

/// Transpose of divergence() in the plain Euclidean inner product, restricted
/// to velocity fields that vanish on the boundary. Tagged DirichletZero.
VectorField divergence_transpose(const ScalarField& q);

/// Divergence in weak form: the negative adjoint, in the trapezoidal inner
/// product, of the compact edge gradient behind the Neumann Laplacian, with
/// edge values averaged from the nodes. -Lap_N x = -divergence_weak(v) is the
/// discrete form of <grad x, grad q> = <v, grad q>, so the normal component of
/// v on the boundary acts as Neumann data. For v vanishing on the boundary it
/// reduces to central differences inside and (v_1 - v_0)/h on boundary nodes.
ScalarField divergence_weak(const VectorField& v);

/// Convective term (w . grad) a with central differences on interior nodes;
/// boundary output is zero.
ScalarField advect(const VectorField& w, const ScalarField& a);
VectorField advect(const VectorField& w, const VectorField& a);

}  // namespace gsavbq
