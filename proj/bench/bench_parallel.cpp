// Serial reference against the OpenMP sample loop.
#include <benchmark/benchmark.h>

#include "staircase/checks.hpp"

using namespace staircase;

namespace {

void sup_of_contraction(benchmark::State& state, Execution mode) {
    auto f = contraction_I(orientation_cocycle(), QuadratureSpec{512, CircleRule::Trapezoid, 4}, false);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_sup(f, static_cast<int>(state.range(0)), 1, 0.05, mode));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void verify_exact(benchmark::State& state, Execution mode) {
    auto orr = orientation_cocycle();
    auto q = cup(orr, smooth_test_function(2)) + coboundary(smooth_test_function(3), false);
    auto c = coboundary(q, false);
    VerifyOptions vo;
    vo.check_invariance = false;
    vo.execution = mode;
    for (auto _ : state) benchmark::DoNotOptimize(verify_primitive(c, q, static_cast<int>(state.range(0)), 1, 0.05, vo));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(sup_of_contraction, serial, Execution::Serial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sup_of_contraction, parallel, Execution::Parallel)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_exact, serial, Execution::Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_exact, parallel, Execution::Parallel)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
