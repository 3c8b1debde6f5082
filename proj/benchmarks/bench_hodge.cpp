#include <benchmark/benchmark.h>

#include "shapewalk/hodge.hpp"

using namespace shapewalk;

static void BM_HodgeExact(benchmark::State& state) {
  const ShapeGraph g = build_graph(static_cast<int>(state.range(0)));
  const auto a = field_A<Rational>(g);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_decompose(g, a));
}
BENCHMARK(BM_HodgeExact)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_HodgeFloat(benchmark::State& state) {
  const ShapeGraph g = build_graph(static_cast<int>(state.range(0)));
  const auto a = field_A<double>(g);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_decompose(g, a));
}
BENCHMARK(BM_HodgeFloat)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);
