#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "gsavbq/grid.hpp"
#include "test_util.hpp"

namespace gsavbq {
namespace {

using test::pi;

ScalarField sin2(const Grid& g, Bc bc = Bc::DirichletZero) {
    return ScalarField::sample(g, bc, [](double x, double y) {
        return std::sin(2.0 * pi * x) * std::sin(2.0 * pi * y);
    });
}

TEST(Grid, SpacingAndIndexing) {
    const Grid g(-1.0, 0.0, 2.0, 1.0, 5, 3);
    EXPECT_DOUBLE_EQ(g.hx(), 0.5);
    EXPECT_DOUBLE_EQ(g.hy(), 0.5);
    EXPECT_DOUBLE_EQ(g.x(4), 1.0);
    EXPECT_DOUBLE_EQ(g.y(2), 1.0);
    EXPECT_EQ(g.size(), 15u);
    EXPECT_EQ(g.index(2, 1), 7u);
    EXPECT_TRUE(g.is_interior(1, 1));
    EXPECT_FALSE(g.is_interior(0, 1));
}

TEST(Grid, WeightsSumToArea) {
    const Grid g(0.0, 0.0, 8.0, 1.0, 33, 9);
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s += g.weight(i, j);
    EXPECT_NEAR(s, 8.0, 1e-12);
}

TEST(Grid, RejectsDegenerateGrids) {
    EXPECT_THROW(Grid(0.0, 0.0, 1.0, 1.0, 2, 5), std::invalid_argument);
    EXPECT_THROW(Grid(0.0, 0.0, 0.0, 1.0, 5, 5), std::invalid_argument);
}

TEST(Grid, SampleZeroesDirichletBoundary) {
    const Grid g = Grid::unit_square(9);
    const ScalarField f = ScalarField::sample(g, Bc::DirichletZero, [](double, double) { return 1.0; });
    EXPECT_EQ(f(0, 4), 0.0);
    EXPECT_EQ(f(8, 8), 0.0);
    EXPECT_EQ(f(4, 4), 1.0);
    const ScalarField n = ScalarField::sample(g, Bc::NeumannZero, [](double, double) { return 1.0; });
    EXPECT_EQ(n(0, 4), 1.0);
}

TEST(Grid, MismatchedGridsThrow) {
    const ScalarField a(Grid::unit_square(9));
    const ScalarField b(Grid::unit_square(17));
    EXPECT_THROW((void)inner(a, b), std::invalid_argument);
    EXPECT_THROW((void)(a + b), std::invalid_argument);
}

TEST(Inner, ConstantOneGivesArea) {
    for (int n : {3, 17, 64}) {
        const Grid g(0.0, 0.0, 1.0, 1.0, n, n);
        const ScalarField one(g, Bc::NeumannZero, 1.0);
        EXPECT_NEAR(inner(one, one), 1.0, 1e-14) << n;
    }
    const Grid r(0.0, 0.0, 8.0, 1.0, 9, 5);
    const ScalarField one(r, Bc::NeumannZero, 1.0);
    EXPECT_NEAR(inner(one, one), 8.0, 1e-13);
}

TEST(Inner, SineProductQuarter) {
    const Grid g = Grid::unit_square(129);
    const ScalarField s = sin2(g);
    EXPECT_NEAR(inner(s, s), 0.25, 1e-4);
}

TEST(Inner, ZeroField) {
    const Grid g = Grid::unit_square(17);
    const ScalarField z(g);
    EXPECT_EQ(inner(z, test::random_field(g, Bc::NeumannZero, 3)), 0.0);
}

TEST(Inner, SymmetricAndBilinear) {
    const Grid g(0.0, 0.0, 2.0, 1.0, 21, 13);
    const ScalarField a = test::random_field(g, Bc::NeumannZero, 1);
    const ScalarField b = test::random_field(g, Bc::NeumannZero, 2);
    const ScalarField c = test::random_field(g, Bc::NeumannZero, 3);
    const double ab = inner(a, b);
    EXPECT_NEAR(ab, inner(b, a), 1e-14 * std::abs(ab));
    const double lhs = inner(2.5 * a + c, b);
    const double rhs = 2.5 * ab + inner(c, b);
    EXPECT_NEAR(lhs, rhs, 1e-14 * (std::abs(lhs) + std::abs(rhs)));

    const VectorField u = test::random_vector(g, Bc::NeumannZero, 7);
    const VectorField v = test::random_vector(g, Bc::NeumannZero, 9);
    EXPECT_NEAR(inner(u, v), inner(u.x, v.x) + inner(u.y, v.y), 1e-14);
}

TEST(Norms, ZeroField) {
    const Grid g = Grid::unit_square(17);
    EXPECT_EQ(norm_l2(ScalarField(g)), 0.0);
    EXPECT_EQ(norm_grad(ScalarField(g)), 0.0);
}

TEST(Norms, SineField) {
    const Grid g = Grid::unit_square(129);
    const ScalarField s = sin2(g);
    EXPECT_NEAR(norm_l2(s), 0.5, 1e-4);
    EXPECT_NEAR(norm_grad(s), pi * std::sqrt(2.0), 1e-2);
}

TEST(MeanZeroProject, ConstantVanishes) {
    const Grid g = Grid::unit_square(17);
    const ScalarField c(g, Bc::NeumannZero, 5.0);
    EXPECT_LT(test::max_abs(mean_zero_project(c)), 1e-14);
}

TEST(MeanZeroProject, Idempotent) {
    const Grid g = Grid::unit_square(33);
    const ScalarField once = mean_zero_project(test::random_field(g, Bc::NeumannZero, 4));
    const ScalarField twice = mean_zero_project(once);
    EXPECT_LT(test::max_abs(twice - once), 1e-14);
}

TEST(MeanZeroProject, QuadratureMeanIsZero) {
    const Grid g(0.0, 0.0, 3.0, 1.0, 25, 9);
    ScalarField a = test::random_field(g, Bc::NeumannZero, 5);
    for (double& v : a.values()) v += 3.0;
    const ScalarField out = mean_zero_project(a);
    EXPECT_LE(std::abs(inner(out, ScalarField(g, Bc::NeumannZero, 1.0))), 1e-12);
    EXPECT_EQ(out.bc(), Bc::NeumannZero);
}

TEST(Fields, AxpyAndScaling) {
    const Grid g = Grid::unit_square(9);
    ScalarField a(g, Bc::NeumannZero, 1.0);
    const ScalarField b(g, Bc::NeumannZero, 2.0);
    a.axpy(-0.5, b);
    EXPECT_LT(test::max_abs(a), 1e-15);
    ScalarField c = 3.0 * b;
    EXPECT_EQ(c(4, 4), 6.0);
    c.fill(std::nan(""));
    EXPECT_FALSE(c.all_finite());
}

}  // namespace
}  // namespace gsavbq
