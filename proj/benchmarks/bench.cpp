#include <benchmark/benchmark.h>

#include "qso/dynamics.hpp"
#include "qso/periodic.hpp"
#include "qso/regimes.hpp"

namespace {

void BM_Eval(benchmark::State& state) {
    const qso::Params p(0.9, 0.2, 0.7);
    double x = 0.41;
    for (auto _ : state) {
        x = qso::eval(p, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Eval);

void BM_DetectConvergence(benchmark::State& state) {
    const qso::Params p(0.3, 0.3, 0.3);
    for (auto _ : state) {
        auto rec = qso::detect_behavior(p, 0.9, 100000, 1e-9);
        benchmark::DoNotOptimize(rec.steps_used);
    }
}
BENCHMARK(BM_DetectConvergence);

void BM_DetectTrapped(benchmark::State& state) {
    const qso::Params p(0.9375, 0.188057041, 0.5);
    for (auto _ : state) {
        auto rec = qso::detect_behavior(p, 0.25, 100000, 1e-9);
        benchmark::DoNotOptimize(rec.steps_used);
    }
}
BENCHMARK(BM_DetectTrapped);

void BM_FixedPointSet(benchmark::State& state) {
    const qso::Params p(0.9, 0.2, 0.5);
    for (auto _ : state) {
        auto s = qso::fixed_point_set(p);
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(BM_FixedPointSet);

void BM_BruteForceCycles(benchmark::State& state) {
    const qso::Params p(0.9375, 0.188057041, 0.5);
    for (auto _ : state) {
        auto cycles = qso::brute_force_two_cycles(p, qso::CycleSide::Near13, state.range(0));
        benchmark::DoNotOptimize(cycles.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceCycles)->Range(1000, 100000)->Complexity();

void BM_VerifyInvariance(benchmark::State& state) {
    const qso::Params p(0.9, 0.2, 0.5);
    const auto traps = qso::trapping_sets(p);
    for (auto _ : state) {
        auto rep = qso::verify_invariance(p, traps.front().set, 10000);
        benchmark::DoNotOptimize(rep.violations);
    }
}
BENCHMARK(BM_VerifyInvariance);

}  // namespace

BENCHMARK_MAIN();
