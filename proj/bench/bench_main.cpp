#include <benchmark/benchmark.h>

#include "wittflag/cli.hpp"

using namespace wf;

static void BM_TableParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(make_table(WittType::B, static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_TableParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TableSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(make_table(WittType::B, static_cast<int>(state.range(0)), false));
}
BENCHMARK(BM_TableSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_MuQuotientDimension(benchmark::State& state) {
    int h = static_cast<int>(state.range(0));
    auto f = mu_family({2 * h + 1, 2 * h + 1});
    for (auto _ : state) benchmark::DoNotOptimize(family_quotient_dimension(f));
}
BENCHMARK(BM_MuQuotientDimension)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_NuReduction(benchmark::State& state) {
    auto f = nu_family(2, {3, 5});
    for (auto _ : state) benchmark::DoNotOptimize(reduce_surplus(f));
}
BENCHMARK(BM_NuReduction)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
