#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "gsavbq/operators.hpp"
#include "test_util.hpp"

namespace gsavbq {
namespace {

using test::pi;

double euclid(const ScalarField& a, const ScalarField& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

TEST(BdfParams, Validation) {
    BdfParams p;
    EXPECT_NO_THROW(p.validate());
    p.k = 0.9;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p.k = 3.0;
    p.l = 0.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    EXPECT_TRUE((BdfParams{3.0, 1.0}).in_error_theory_regime());
    EXPECT_FALSE((BdfParams{2.0, 1.0}).in_error_theory_regime());
}

TEST(BdfComb, ConstantSequenceVanishes) {
    for (double k : {1.0, 2.5, 3.0, 9.0}) EXPECT_EQ(bdf_comb(4.0, 4.0, 4.0, k), 0.0) << k;
    const Grid g = Grid::unit_square(9);
    const ScalarField c(g, Bc::NeumannZero, 1.25);
    EXPECT_EQ(test::max_abs(bdf_comb(c, c, c, 3.0)), 0.0);
}

TEST(BdfComb, LinearSequenceGivesTwoTau) {
    const double tau = 0.125;
    for (double k : {1.0, 3.0, 4.5}) {
        const double n = 7.0;
        EXPECT_NEAR(bdf_comb((n + 1) * tau, n * tau, (n - 1) * tau, k), 2.0 * tau, 1e-14) << k;
    }
}

TEST(BdfComb, ScalarArithmetic) { EXPECT_EQ(bdf_comb(5.0, 3.0, 2.0, 3.0), 9.0); }

TEST(Extrap, ConstantSequence) { EXPECT_EQ(extrap(2.0, 2.0, 3.7), 2.0); }

TEST(Extrap, ExactForLinearSequences) {
    for (double k : {1.0, 2.0, 3.0, 5.5}) {
        const double n = 4.0;
        // delta^k v^{n+1} with v^m = m gives n + k
        EXPECT_NEAR(extrap(n + 1.0, n, k), n + k, 1e-14) << k;
    }
}

TEST(Extrap, KOneIsIdentity) {
    const Grid g = Grid::unit_square(9);
    const ScalarField a = test::random_field(g, Bc::NeumannZero, 1);
    const ScalarField b = test::random_field(g, Bc::NeumannZero, 2);
    EXPECT_EQ(test::max_abs(extrap(a, b, 1.0) - a), 0.0);
}

TEST(BdfComb, FieldsAreLinear) {
    const Grid g = Grid::unit_square(17);
    const auto r = [&](int s) { return test::random_field(g, Bc::NeumannZero, s); };
    const ScalarField a0 = r(1), a1 = r(2), a2 = r(3), b0 = r(4), b1 = r(5), b2 = r(6);
    const double s = -1.75;
    const ScalarField lhs = bdf_comb(a2 + s * b2, a1 + s * b1, a0 + s * b0, 3.0);
    const ScalarField rhs = bdf_comb(a2, a1, a0, 3.0) + s * bdf_comb(b2, b1, b0, 3.0);
    EXPECT_LT(test::max_abs(lhs - rhs), 1e-13);
    const ScalarField le = extrap(a1 + s * b1, a0 + s * b0, 4.0);
    const ScalarField re = extrap(a1, a0, 4.0) + s * extrap(b1, b0, 4.0);
    EXPECT_LT(test::max_abs(le - re), 1e-13);
}

TEST(Laplacian, ConstantNeumannIsZero) {
    const Grid g(0.0, 0.0, 2.0, 1.0, 17, 9);
    const ScalarField c(g, Bc::NeumannZero, 3.0);
    EXPECT_EQ(test::max_abs(laplacian(c)), 0.0);
}

TEST(Laplacian, DirichletEigenfunction) {
    const Grid g = Grid::unit_square(129);
    const ScalarField s = ScalarField::sample(
        g, Bc::DirichletZero, [](double x, double y) { return std::sin(pi * x) * std::sin(pi * y); });
    const ScalarField lap = laplacian(s);
    const ScalarField err = lap + (2.0 * pi * pi) * s;
    EXPECT_LT(test::max_abs_interior(err), 1e-2 * 2.0 * pi * pi);
    EXPECT_EQ(lap(0, 5), 0.0);
}

TEST(Laplacian, LinearNeumannInteriorExactlyZero) {
    // dyadic spacing keeps the node coordinates exact
    const Grid g = Grid::unit_square(17);
    const ScalarField x = ScalarField::sample(g, Bc::NeumannZero, [](double xx, double) { return xx; });
    EXPECT_EQ(test::max_abs_interior(laplacian(x)), 0.0);
}

TEST(Gradient, ConstantGivesZero) {
    const Grid g = Grid::unit_square(17);
    const VectorField gr = gradient(ScalarField(g, Bc::NeumannZero, 2.0));
    EXPECT_EQ(test::max_abs(gr.x), 0.0);
    EXPECT_EQ(test::max_abs(gr.y), 0.0);
}

TEST(Divergence, RotationFieldIsExactlyFree) {
    const Grid g(0.0, 0.0, 1.0, 2.0, 17, 33);
    const VectorField v = VectorField::sample(
        g, Bc::NeumannZero, [](double x, double y) { return std::array<double, 2>{y, -x}; });
    EXPECT_EQ(test::max_abs(divergence(v)), 0.0);
}

TEST(Gradient, SineField) {
    const Grid g = Grid::unit_square(129);
    const ScalarField s = ScalarField::sample(g, Bc::NeumannZero, [](double x, double y) {
        return std::sin(2.0 * pi * x) * std::sin(2.0 * pi * y);
    });
    const VectorField gr = gradient(s);
    const VectorField ex = VectorField::sample(g, Bc::NeumannZero, [](double x, double y) {
        return std::array<double, 2>{2.0 * pi * std::cos(2.0 * pi * x) * std::sin(2.0 * pi * y),
                        2.0 * pi * std::sin(2.0 * pi * x) * std::cos(2.0 * pi * y)};
    });
    EXPECT_LT(test::max_abs(gr.x - ex.x), 1e-2);
    EXPECT_LT(test::max_abs(gr.y - ex.y), 1e-2);
}

TEST(Gradient, SbpClosureOnBoundary) {
    const Grid g = Grid::unit_square(9);
    const ScalarField q = test::random_field(g, Bc::NeumannZero, 11);
    const VectorField gs = gradient_sbp(q);
    const VectorField gc = gradient(q);
    EXPECT_DOUBLE_EQ(gs.x(0, 3), (q(1, 3) - q(0, 3)) / g.hx());
    EXPECT_DOUBLE_EQ(gs.y(4, 8), (q(4, 8) - q(4, 7)) / g.hy());
    EXPECT_EQ(gs.x(4, 4), gc.x(4, 4));
    EXPECT_EQ(gs.y(0, 4), gc.y(0, 4));
}

TEST(Divergence, TransposeIsAdjoint) {
    for (int n : {5, 6, 17}) {
        const Grid g(0.0, 0.0, 1.0, 1.5, n, n + 2);
        const ScalarField q = test::random_field(g, Bc::NeumannZero, 21);
        const VectorField u = test::random_vector(g, Bc::DirichletZero, 22);
        const VectorField bt = divergence_transpose(q);
        const double lhs = euclid(divergence(u), q);
        const double rhs = euclid(bt.x, u.x) + euclid(bt.y, u.y);
        EXPECT_NEAR(lhs, rhs, 1e-12 * std::abs(lhs)) << n;
        EXPECT_EQ(bt.x(0, 2), 0.0);
    }
}

TEST(Divergence, WeakFormReducesForWallFields) {
    const Grid g = Grid::unit_square(17);
    const VectorField v = test::random_vector(g, Bc::DirichletZero, 31);
    const ScalarField dw = divergence_weak(v);
    const ScalarField dc = divergence(v);
    EXPECT_NEAR(dw(5, 7), dc(5, 7), 1e-12);
    // only the normal component enters on a boundary node: (v_1 - v_0)/h with v_0 = 0
    EXPECT_NEAR(dw(0, 7), v.x(1, 7) / g.hx(), 1e-12);
    EXPECT_NEAR(dw(7, 16), -v.y(7, 15) / g.hy(), 1e-12);
}

TEST(Divergence, WeakFormIsNegativeAdjointOfSbpGradient) {
    // <div_w v, q> = -<v, G q> in the trapezoidal product for wall-bounded v
    const Grid g(0.0, 0.0, 2.0, 1.0, 17, 9);
    const VectorField v = test::random_vector(g, Bc::DirichletZero, 41);
    const ScalarField q = test::random_field(g, Bc::NeumannZero, 42);
    const double lhs = inner(divergence_weak(v), q);
    const double rhs = -inner(v, gradient_sbp(q));
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::abs(lhs));
}

TEST(Advect, ZeroVelocity) {
    const Grid g = Grid::unit_square(17);
    const ScalarField a = test::random_field(g, Bc::NeumannZero, 1);
    EXPECT_EQ(test::max_abs(advect(VectorField(g), a)), 0.0);
}

TEST(Advect, UnitVelocityOnLinearField) {
    const Grid g = Grid::unit_square(17);
    const VectorField w(ScalarField(g, Bc::NeumannZero, 1.0), ScalarField(g, Bc::NeumannZero, 0.0));
    const ScalarField x = ScalarField::sample(g, Bc::NeumannZero, [](double xx, double) { return xx; });
    const ScalarField out = advect(w, x);
    for (int j = 1; j < g.ny() - 1; ++j)
        for (int i = 1; i < g.nx() - 1; ++i) EXPECT_NEAR(out(i, j), 1.0, 1e-13);
    EXPECT_EQ(out(0, 3), 0.0);
}

TEST(Advect, SkewSymmetryUpToTruncation) {
    // w = curl of sin^2(pi x) sin^2(pi y) is divergence-free and vanishes on the walls
    const auto run = [](int n) {
        const Grid g = Grid::unit_square(n);
        const VectorField w = VectorField::sample(g, Bc::DirichletZero, [](double x, double y) {
            const double sx = std::sin(pi * x), sy = std::sin(pi * y);
            return std::array<double, 2>{2.0 * pi * sx * sx * sy * std::cos(pi * y),
                            -2.0 * pi * sy * sy * sx * std::cos(pi * x)};
        });
        const ScalarField a = ScalarField::sample(g, Bc::DirichletZero, [](double x, double y) {
            return std::sin(pi * x) * std::sin(pi * y) * std::exp(x + 0.5 * y * y);
        });
        return std::abs(inner(advect(w, a), a)) / inner(a, a);  // O(h^2)
    };
    const double e33 = run(33);
    const double e65 = run(65);
    EXPECT_LT(e65, 1e-2);
    EXPECT_LT(e65, 0.35 * e33);
}

}  // namespace
}  // namespace gsavbq
