#include <gtest/gtest.h>

#include <cmath>

#include "gsavbq/operators.hpp"
#include "gsavbq/problems.hpp"
#include "test_util.hpp"

namespace gsavbq {
namespace {

// Continuous residuals of the manufactured solution from central differences
// of the closed-form fields, independent of the hard-coded forcing.
struct Residual {
    double momentum;
    double heat;
};

Residual manufactured_residual(const ProblemSpec& s, double h, double t, double x, double y) {
    const ExactSolution& ex = *s.exact;
    const auto u = [&](int c, double tt, double xx, double yy) { return ex.u(tt, xx, yy)[c]; };
    const auto dt = [&](auto f) { return (f(t + h, x, y) - f(t - h, x, y)) / (2 * h); };
    const auto dx = [&](auto f) { return (f(t, x + h, y) - f(t, x - h, y)) / (2 * h); };
    const auto dy = [&](auto f) { return (f(t, x, y + h) - f(t, x, y - h)) / (2 * h); };
    const auto lap = [&](auto f) {
        return (f(t, x + h, y) + f(t, x - h, y) + f(t, x, y + h) + f(t, x, y - h) - 4 * f(t, x, y)) /
               (h * h);
    };
    const auto u0 = [&](double tt, double xx, double yy) { return u(0, tt, xx, yy); };
    const auto u1 = [&](double tt, double xx, double yy) { return u(1, tt, xx, yy); };
    const auto th = [&](double tt, double xx, double yy) { return ex.theta(tt, xx, yy); };
    const auto p = [&](double tt, double xx, double yy) { return ex.p(tt, xx, yy); };
    const double a = u0(t, x, y), b = u1(t, x, y);
    const Vec2 f1 = manufactured_f1(t, x, y, s.nu);
    const Vec2 f2 = s.f2(th(t, x, y));
    const double r0 = dt(u0) + a * dx(u0) + b * dy(u0) - s.nu * lap(u0) + dx(p) - f2[0] - f1[0];
    const double r1 = dt(u1) + a * dx(u1) + b * dy(u1) - s.nu * lap(u1) + dy(p) - f2[1] - f1[1];
    const double rh =
        dt(th) + a * dx(th) + b * dy(th) - s.kappa * lap(th) - manufactured_g(t, x, y, s.kappa);
    return {std::hypot(r0, r1), std::abs(rh)};
}

TEST(Manufactured, VelocityStartsAtRest) {
    const ProblemSpec s = manufactured_spec(17);
    EXPECT_TRUE(test::bitwise_zero(initial_velocity(s)) || test::max_abs(initial_velocity(s)) == 0.0);
    EXPECT_EQ(test::max_abs(initial_theta(s)), 0.0);
}

TEST(Manufactured, DiscretelyNearlySolenoidal) {
    const ProblemSpec s = manufactured_spec(129);
    EXPECT_LE(test::max_abs(divergence(exact_velocity(s, 1.0))), 1e-2);
}

TEST(Manufactured, VanishesOnTheWalls) {
    const ProblemSpec s = manufactured_spec(9);
    for (double q : {0.0, 0.3, 1.0}) {
        const Vec2 a = s.exact->u(0.9, q, 0.0);
        const Vec2 b = s.exact->u(0.9, 1.0, q);
        EXPECT_NEAR(std::hypot(a[0], a[1]), 0.0, 1e-15);
        EXPECT_NEAR(std::hypot(b[0], b[1]), 0.0, 1e-15);
        EXPECT_NEAR(s.exact->theta(0.9, 0.0, q), 0.0, 1e-15);
    }
}

TEST(Manufactured, ForcingSatisfiesEquationsToSecondOrder) {
    for (double nu : {1.0, 0.05}) {
        const ProblemSpec s = manufactured_spec(9, nu, 2.0 * nu);
        for (const auto& pt : {Vec2{0.3, 0.6}, Vec2{0.71, 0.18}}) {
            const Residual r1 = manufactured_residual(s, 1e-3, 0.7, pt[0], pt[1]);
            const Residual r2 = manufactured_residual(s, 5e-4, 0.7, pt[0], pt[1]);
            EXPECT_NEAR(r1.momentum / r2.momentum, 4.0, 0.4) << nu;
            EXPECT_NEAR(r1.heat / r2.heat, 4.0, 0.4) << nu;
            EXPECT_LT(r2.momentum, 1e-2);
            EXPECT_LT(r2.heat, 1e-2);
        }
    }
}

TEST(Manufactured, PressureHasZeroMean) {
    const ProblemSpec s = manufactured_spec(65);
    EXPECT_NEAR(mean(exact_pressure(s, 1.3)), 0.0, 1e-12);
}

TEST(Marsigli, Parameters) {
    const ProblemSpec s = marsigli_spec(65, 9);
    EXPECT_DOUBLE_EQ(s.nu, 2e-4);
    EXPECT_DOUBLE_EQ(s.kappa, 2e-4);
    EXPECT_EQ(s.theta_bc, Bc::NeumannZero);
    EXPECT_DOUBLE_EQ(s.T, 10.0);
    EXPECT_DOUBLE_EQ(s.grid.lx(), 8.0);
    const Vec2 f = s.f2(1.5);
    EXPECT_DOUBLE_EQ(f[0], 0.0);
    EXPECT_DOUBLE_EQ(f[1], 6.0);
}

TEST(Marsigli, InitialTemperatureMean) {
    const ProblemSpec s = marsigli_spec(513, 65);
    const ScalarField th = initial_theta(s);
    EXPECT_NEAR(mean(th), 1.25, 1e-3);
    EXPECT_NEAR(th(0, 5), 1.5, 1e-12);
    EXPECT_NEAR(th(512, 5), 1.0, 1e-12);
}

TEST(ShearLayer, DataAndBoundaries) {
    const ProblemSpec s = shear_layer_spec(33);
    EXPECT_DOUBLE_EQ(s.nu, 0.005);
    EXPECT_EQ(test::max_abs(initial_theta(s)), 0.0);
    const VectorField u = initial_velocity(s);
    EXPECT_EQ(u.x(0, 10), 0.0);
    EXPECT_GT(test::max_abs(u), 0.1);
    EXPECT_DOUBLE_EQ(s.grid.x0(), -1.0);
}

TEST(Quiescent, EverythingZero) {
    const ProblemSpec s = quiescent_spec(9);
    EXPECT_TRUE(test::bitwise_zero(initial_theta(s)));
    EXPECT_TRUE(test::bitwise_zero(initial_velocity(s)));
    EXPECT_TRUE(test::bitwise_zero(total_force(s, 0.5, initial_theta(s))));
    EXPECT_TRUE(test::bitwise_zero(sample_g(s, 0.5)));
}

}  // namespace
}  // namespace gsavbq
