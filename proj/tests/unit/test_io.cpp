#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gsavbq/io.hpp"
#include "test_util.hpp"

namespace gsavbq {
namespace {

std::filesystem::path temp_dir(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("gsavbq_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

TEST(FormatDouble, RoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min()})
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v) << v;
}

TEST(SeriesCsv, EmptySeriesIsHeaderOnly) {
    std::ostringstream os;
    write_csv(os, std::span<const StepReport>{});
    EXPECT_EQ(os.str(), "t,E,r,xi,eta,div_norm\n");
    std::istringstream is(os.str());
    const CsvData d = read_csv(is);
    EXPECT_EQ(d.header.size(), 6u);
    EXPECT_TRUE(d.rows.empty());
}

TEST(SeriesCsv, RoundTripIsExact) {
    std::vector<StepReport> reps(3);
    for (int i = 0; i < 3; ++i) {
        reps[i].t = 0.1 * i;
        reps[i].energy = std::exp(-0.3 * i) / 7.0;
        reps[i].r = 1.0 + 1.0 / 3.0 * i;
        reps[i].xi = 0.999999999999 - 1e-17 * i;
        reps[i].eta = 1.0 - std::pow(1.0 - reps[i].xi, 2);
        reps[i].div_norm = 1e-13 * std::sqrt(2.0 + i);
    }
    const auto dir = temp_dir("series");
    write_csv(dir / "nested" / "series.csv", reps);
    const CsvData d = read_csv(dir / "nested" / "series.csv");
    ASSERT_EQ(d.rows.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(d.rows[i][0], reps[i].t);
        EXPECT_EQ(d.rows[i][1], reps[i].energy);
        EXPECT_EQ(d.rows[i][2], reps[i].r);
        EXPECT_EQ(d.rows[i][3], reps[i].xi);
        EXPECT_EQ(d.rows[i][4], reps[i].eta);
        EXPECT_EQ(d.rows[i][5], reps[i].div_norm);
    }
    std::filesystem::remove_all(dir);
}

TEST(ErrorTableCsv, RoundTrip) {
    ErrorTable t;
    t.metadata = {{"problem", "manufactured"}, {"nx", "129"}};
    for (int i = 0; i < 2; ++i) {
        ErrorRow r;
        r.i = i;
        r.tau = std::acos(-1.0) / (16 << i);
        r.error_ubar = 0.1 / (1 << (2 * i)) + 1e-17;
        r.error_u = 0.2 / 3.0;
        r.error_p = 1.0 / 7.0;
        r.error_theta = 0.05 * (i + 1);
        r.max_one_minus_eta = 1e-9;
        r.diverged = i == 1;
        t.rows.push_back(r);
    }
    t.recompute_ratios();
    std::stringstream ss;
    write_csv(ss, t);
    const CsvData d = read_csv(ss);
    ASSERT_EQ(d.comments.size(), 2u);
    EXPECT_EQ(d.comments[0], "problem = manufactured");
    ASSERT_EQ(d.header.size(), 12u);
    EXPECT_EQ(d.header[2], "error_ubar");
    ASSERT_EQ(d.rows.size(), 2u);
    EXPECT_TRUE(std::isnan(d.rows[0][3]));
    EXPECT_EQ(d.rows[1][1], t.rows[1].tau);
    EXPECT_EQ(d.rows[1][2], t.rows[1].error_ubar);
    EXPECT_EQ(d.rows[1][3], t.rows[1].ratio_ubar);
    EXPECT_EQ(d.rows[1][9], t.rows[1].ratio_theta);
    EXPECT_EQ(d.rows[1][11], 1.0);
}

TEST(ReadCsv, MalformedInputReportsLine) {
    std::istringstream bad_num("a,b\n1,2\n3,x\n");
    try {
        (void)read_csv(bad_num);
        FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    std::istringstream short_row("a,b\n1\n");
    EXPECT_THROW((void)read_csv(short_row), std::runtime_error);
    std::istringstream empty("");
    EXPECT_THROW((void)read_csv(empty), std::runtime_error);
    EXPECT_THROW((void)read_csv(std::filesystem::path("/nonexistent/gsavbq.csv")), std::runtime_error);
}

TEST(Vtk, HeaderAndCounts) {
    const Grid g(0.0, 0.0, 2.0, 1.0, 5, 3);
    std::ostringstream os;
    write_vtk(os, ScalarField(g), VectorField(g), ScalarField(g, Bc::NeumannZero));
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "# vtk DataFile Version 3.0");
    const std::string s = os.str();
    EXPECT_NE(s.find("DIMENSIONS 5 3 1"), std::string::npos);
    EXPECT_NE(s.find("POINT_DATA 15"), std::string::npos);
    EXPECT_NE(s.find("SCALARS theta double 1"), std::string::npos);
    EXPECT_NE(s.find("SCALARS p double 1"), std::string::npos);
    EXPECT_NE(s.find("VECTORS u double"), std::string::npos);
}

TEST(Vtk, MismatchedGridsThrow) {
    std::ostringstream os;
    EXPECT_THROW(write_vtk(os, ScalarField(Grid::unit_square(5)), VectorField(Grid::unit_square(9)),
                           ScalarField(Grid::unit_square(5))),
                 std::invalid_argument);
}

TEST(Vtk, UnwritablePathCarriesContext) {
    const Grid g = Grid::unit_square(3);
    try {
        write_vtk(std::filesystem::path("/proc/gsavbq/x.vtk"), ScalarField(g), VectorField(g), ScalarField(g));
        FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("x.vtk"), std::string::npos);
    }
}

}  // namespace
}  // namespace gsavbq
