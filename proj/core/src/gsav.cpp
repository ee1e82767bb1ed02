#include "gsavbq/gsav.hpp"

#include "gsavbq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsavbq {

GsavConstants derive_constants(double alpha, double C_f1, double C_g) {
    if (!(alpha >= 0.0) || !(C_f1 >= 0.0) || !(C_g >= 0.0))
        throw std::invalid_argument("derive_constants: inputs must be non-negative");
    GsavConstants c;
    c.alpha = alpha;
    c.C_f1 = C_f1;
    c.C_g = C_g;
    c.alpha_bar = 4.0 * std::sqrt(2.0) * alpha;
    c.C_bar = std::max({16.0 * C_f1 * C_f1, 8.0 * c.alpha_bar * c.alpha_bar * C_g * C_g, 1.0});
    return c;
}

double energy(const ScalarField& theta, const VectorField& u, const GsavConstants& cst) {
    const double ab2 = cst.alpha_bar * cst.alpha_bar;
    return 0.5 * inner(u, u) + 0.5 * ab2 * inner(theta, theta);
}

double dissipation_norm_sq(const ScalarField& a) { return -inner(laplacian(a), a); }

double dissipation_norm_sq(const VectorField& a) {
    return dissipation_norm_sq(a.x) + dissipation_norm_sq(a.y);
}

double energy_rate(const ScalarField& theta, const VectorField& u, const VectorField& f_of_theta,
                   const ScalarField& g_now, double nu, double kappa, const GsavConstants& cst) {
    const double ab2 = cst.alpha_bar * cst.alpha_bar;
    return -nu * dissipation_norm_sq(u) + inner(f_of_theta, u) -
           kappa * ab2 * dissipation_norm_sq(theta) + ab2 * inner(g_now, theta);
}

double update_r(const GsavState& state, double E_new, double dEdt_new, double tau,
                const GsavConstants& cst) {
    return std::exp(tau * dEdt_new / (E_new + cst.C_bar)) * state.r;
}

XiEta compute_xi_eta(double r, double E, const GsavConstants& cst) {
    const double xi = r / (E + cst.C_bar);
    const double d = 1.0 - xi;
    return {xi, 1.0 - d * d};
}

}  // namespace gsavbq
