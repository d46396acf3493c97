// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "dbialg/graph.hpp"
#include "dbialg/oracles.hpp"
#include "dbialg/orientations.hpp"

using namespace dbialg;

static void BM_SingleSourceSerial(benchmark::State& st) {
    const Graph g = graphs::complete(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_single_source_serial(g, 0));
}
static void BM_SingleSourceParallel(benchmark::State& st) {
    const Graph g = graphs::complete(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_single_source(g, 0));
}
BENCHMARK(BM_SingleSourceSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleSourceParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_ColoringsSerial(benchmark::State& st) {
    const Graph g = graphs::cycle(7);
    const int k = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(oracle::count_proper_colorings_serial(g, k));
}
static void BM_ColoringsParallel(benchmark::State& st) {
    const Graph g = graphs::cycle(7);
    const int k = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(oracle::count_proper_colorings(g, k));
}
BENCHMARK(BM_ColoringsSerial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringsParallel)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
