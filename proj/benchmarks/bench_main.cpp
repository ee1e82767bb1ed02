#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gsavbq/linsolve.hpp"
#include "gsavbq/operators.hpp"
#include "gsavbq/problems.hpp"
#include "gsavbq/stepper.hpp"

namespace {

using namespace gsavbq;

ScalarField random_field(const Grid& g, Bc bc) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ScalarField f(g, bc);
    for (double& v : f.values()) v = dist(rng);
    f.enforce_bc();
    return f;
}

void BM_Laplacian(benchmark::State& state) {
    const Grid g = Grid::unit_square(static_cast<int>(state.range(0)));
    const ScalarField a = random_field(g, Bc::NeumannZero);
    for (auto _ : state) benchmark::DoNotOptimize(laplacian(a));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Laplacian)->Arg(65)->Arg(129)->Arg(257);

void BM_Advect(benchmark::State& state) {
    const Grid g = Grid::unit_square(static_cast<int>(state.range(0)));
    const VectorField w(random_field(g, Bc::DirichletZero), random_field(g, Bc::DirichletZero));
    const ScalarField a = random_field(g, Bc::NeumannZero);
    for (auto _ : state) benchmark::DoNotOptimize(advect(w, a));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Advect)->Arg(65)->Arg(129)->Arg(257);

void BM_ShiftedSolve(benchmark::State& state) {
    // velocity system of a tau = T/64 step on the manufactured problem
    const Grid g = Grid::unit_square(static_cast<int>(state.range(0)));
    const ScalarField rhs = random_field(g, Bc::DirichletZero);
    const double tau = std::numbers::pi / 64.0;
    int iters = 0;
    for (auto _ : state) {
        const ScalarSolve s = solve_shifted(7.0, 6.0 * tau, rhs);
        iters = s.stats.iterations;
        benchmark::DoNotOptimize(s.x);
    }
    state.counters["cg_iters"] = iters;
}
BENCHMARK(BM_ShiftedSolve)->Arg(65)->Arg(129)->Unit(benchmark::kMillisecond);

void BM_NeumannPoisson(benchmark::State& state) {
    const Grid g = Grid::unit_square(static_cast<int>(state.range(0)));
    const ScalarField rhs = random_field(g, Bc::NeumannZero);
    int iters = 0;
    for (auto _ : state) {
        const ScalarSolve s = solve_poisson_neumann(rhs);
        iters = s.stats.iterations;
        benchmark::DoNotOptimize(s.x);
    }
    state.counters["cg_iters"] = iters;
}
BENCHMARK(BM_NeumannPoisson)->Arg(65)->Arg(129)->Unit(benchmark::kMillisecond);

void BM_FullStep(benchmark::State& state) {
    const ProblemSpec spec = manufactured_spec(static_cast<int>(state.range(0)));
    const double tau = spec.T / 64.0;
    const SchemeParams params;
    const BootstrapResult b = bootstrap(spec, params, tau, BootstrapMode::Exact);
    for (auto _ : state) benchmark::DoNotOptimize(full_step(b.history, b.state, params, spec, tau));
}
BENCHMARK(BM_FullStep)->Arg(65)->Arg(129)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
