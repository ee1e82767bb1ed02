#pragma once

#include "gsavbq/grid.hpp"

namespace gsavbq {

/// Energy-scaling constants. alpha is the Lipschitz constant of f2, C_f1 and
/// C_g bound the time-dependent forcing.
struct GsavConstants {
    double alpha = 0.0;
    double alpha_bar = 0.0;  ///< 4 sqrt(2) alpha
    double C_bar = 1.0;      ///< max(16 C_f1^2, 8 alpha_bar^2 C_g^2, 1)
    double C_f1 = 0.0;
    double C_g = 0.0;
};

/// Auxiliary scalar r and the derived scalings xi = r / (E + C_bar),
/// eta = 1 - (1 - xi)^2.
struct GsavState {
    double r = 1.0;
    double xi = 1.0;
    double eta = 1.0;

    /// r = E + C_bar, xi = eta = 1.
    static GsavState initial(double energy, const GsavConstants& cst) noexcept {
        return {energy + cst.C_bar, 1.0, 1.0};
    }
};

struct XiEta {
    double xi;
    double eta;
};

GsavConstants derive_constants(double alpha, double C_f1, double C_g);

/// E = 1/2 |u|^2 + alpha_bar^2 / 2 |theta|^2
double energy(const ScalarField& theta, const VectorField& u, const GsavConstants& cst);

/// Discrete |grad a|^2 in summation-by-parts form, -<Lap_h a, a>, so the
/// dissipation matches the Laplacian the solver inverts.
double dissipation_norm_sq(const ScalarField& a);
double dissipation_norm_sq(const VectorField& a);

/// dE/dt = -nu |grad u|^2 + <f, u> - kappa alpha_bar^2 |grad theta|^2 + alpha_bar^2 <g, theta>
double energy_rate(const ScalarField& theta, const VectorField& u, const VectorField& f_of_theta,
                   const ScalarField& g_now, double nu, double kappa, const GsavConstants& cst);

/// Exponential update r_new = exp(tau dEdt / (E + C_bar)) r_old. Never clamped.
double update_r(const GsavState& state, double E_new, double dEdt_new, double tau,
                const GsavConstants& cst);

XiEta compute_xi_eta(double r, double E, const GsavConstants& cst);

}  // namespace gsavbq
