#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gsavbq/grid.hpp"

namespace gsavbq::test {

inline constexpr double pi = std::numbers::pi;

inline ScalarField random_field(const Grid& g, Bc bc, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ScalarField f(g, bc);
    for (double& v : f.values()) v = dist(rng);
    f.enforce_bc();
    return f;
}

inline VectorField random_vector(const Grid& g, Bc bc, std::uint64_t seed) {
    return {random_field(g, bc, seed), random_field(g, bc, seed + 1)};
}

inline double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs(const VectorField& f) { return std::max(max_abs(f.x), max_abs(f.y)); }

inline double max_abs_interior(const ScalarField& f) {
    const Grid& g = f.grid();
    double m = 0.0;
    for (int j = 1; j < g.ny() - 1; ++j)
        for (int i = 1; i < g.nx() - 1; ++i) m = std::max(m, std::abs(f(i, j)));
    return m;
}

inline bool bitwise_zero(const ScalarField& f) {
    for (double v : f.values())
        if (std::bit_cast<std::uint64_t>(v) != 0) return false;
    return true;
}

inline bool bitwise_zero(const VectorField& f) { return bitwise_zero(f.x) && bitwise_zero(f.y); }

}  // namespace gsavbq::test
