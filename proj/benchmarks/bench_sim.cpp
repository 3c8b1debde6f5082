#include <benchmark/benchmark.h>

#include "shapewalk/sim.hpp"

using namespace shapewalk;

static void BM_GraphWalkSteps(benchmark::State& state) {
  const ShapeGraph g = build_graph(static_cast<int>(state.range(0)));
  RandomStream rng(1);
  GraphWalkState s{Shape::all_ones(g.order()), 0};
  for (auto _ : state) {
    s = graph_walk_step(g, s, rng);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GraphWalkSteps)->Arg(1)->Arg(3)->Arg(10);

static void BM_SampleDisplacements(benchmark::State& state) {
  const ShapeGraph g = build_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_displacements(g, 1000, 1000, 7, 1));
  state.SetItemsProcessed(state.iterations() * 1000 * 1000);
}
BENCHMARK(BM_SampleDisplacements)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ChainStep(benchmark::State& state) {
  const ShapeGraph g = build_graph(static_cast<int>(state.range(0)));
  RandomStream rng(2);
  WalkerState z = walker_from_shape(Shape::all_ones(g.order()));
  for (auto _ : state) {
    z = chain_step(g, z, rng);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_ChainStep)->Arg(3)->Arg(10);
