#pragma once

#include "gsavbq/grid.hpp"

namespace gsavbq::detail {

// Second-order first derivatives at a node: central inside, one-sided on the boundary.
inline double ddx(const ScalarField& a, int i, int j) noexcept {
    const Grid& g = a.grid();
    const int n = g.nx();
    const double inv2h = 0.5 / g.hx();
    if (i == 0) return (-3.0 * a(0, j) + 4.0 * a(1, j) - a(2, j)) * inv2h;
    if (i == n - 1) return (3.0 * a(n - 1, j) - 4.0 * a(n - 2, j) + a(n - 3, j)) * inv2h;
    return (a(i + 1, j) - a(i - 1, j)) * inv2h;
}

inline double ddy(const ScalarField& a, int i, int j) noexcept {
    const Grid& g = a.grid();
    const int n = g.ny();
    const double inv2h = 0.5 / g.hy();
    if (j == 0) return (-3.0 * a(i, 0) + 4.0 * a(i, 1) - a(i, 2)) * inv2h;
    if (j == n - 1) return (3.0 * a(i, n - 1) - 4.0 * a(i, n - 2) + a(i, n - 3)) * inv2h;
    return (a(i, j + 1) - a(i, j - 1)) * inv2h;
}

}  // namespace gsavbq::detail
