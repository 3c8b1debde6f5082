#include <benchmark/benchmark.h>

#include "shapewalk/shape_graph.hpp"

using namespace shapewalk;

static void BM_BuildGraph(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(k));
}
BENCHMARK(BM_BuildGraph)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildGraphInductive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph_inductive(k));
}
BENCHMARK(BM_BuildGraphInductive)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);
