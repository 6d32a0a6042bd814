// Serial reference vs OpenMP-parallel line sweeps. Wall time is what
// matters when comparing scheduling modes, hence UseRealTime everywhere.

#include <benchmark/benchmark.h>

#include <array>
#include <random>

#include "qce/directions.hpp"
#include "qce/envelope1d.hpp"
#include "qce/grid.hpp"
#include "qce/line_sweep.hpp"
#include "qce/testfns.hpp"

namespace {

qce::GridFn cones_grid(int n) {
    return qce::build(qce::Box::cube(2, -1.5, 1.5), std::array<int, 2>{n, n},
                      qce::two_cones({2, 0.0, 1.0 / 3.0, qce::Combiner::min_of}));
}

qce::Execution exec_of(const benchmark::State& state) {
    return state.range(1) == 0 ? qce::Execution::serial : qce::Execution::parallel;
}

void BM_direction_pass(benchmark::State& state) {
    const qce::GridFn g = cones_grid(static_cast<int>(state.range(0)));
    const std::array<int, 3> step{2, 1, 0};  // skew step: many short lines
    for (auto _ : state) {
        benchmark::DoNotOptimize(qce::apply_direction(g, step, {}, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}

void BM_solve(benchmark::State& state) {
    const qce::GridFn g = cones_grid(static_cast<int>(state.range(0)));
    const qce::DirectionSet D = qce::lattice_directions(2, 3);
    qce::SolveParams p;
    p.tolerance = 1e-6;
    p.max_outer_iterations = 50;
    p.execution = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qce::solve(g, D, p));
    }
}

void BM_robust_pass(benchmark::State& state) {
    const qce::GridFn g = cones_grid(static_cast<int>(state.range(0)));
    const std::array<int, 3> step{1, 1, 0};
    const qce::RobustParams robust{0.25};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qce::apply_direction(g, step, robust, exec_of(state)));
    }
}

void BM_envelope_1d(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    qce::Seq g;
    g.values.resize(state.range(0));
    for (double& v : g.values) v = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qce::qce_1d(g));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

// second argument: 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_direction_pass)->Args({256, 0})->Args({256, 1})->Args({1024, 0})->Args({1024, 1})
    ->UseRealTime();
BENCHMARK(BM_solve)->Args({256, 0})->Args({256, 1})->UseRealTime();
BENCHMARK(BM_robust_pass)->Args({256, 0})->Args({256, 1})->UseRealTime();
BENCHMARK(BM_envelope_1d)->Arg(1 << 10)->Arg(1 << 16);

BENCHMARK_MAIN();
