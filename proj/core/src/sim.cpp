#include "shapewalk/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "shapewalk/errors.hpp"

namespace shapewalk {

bool in_state_space(const WalkerState& z) {
  if (z.heights.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < z.heights.size(); ++i) {
    if (std::llabs(z.heights[i + 1] - z.heights[i]) != 1) return false;
  }
  return true;
}

WalkerState walker_from_shape(const Shape& shape, std::int64_t first_height) {
  WalkerState z;
  z.heights.reserve(static_cast<std::size_t>(shape.order()) + 1);
  z.heights.push_back(first_height);
  for (int i = 0; i < shape.order(); ++i) z.heights.push_back(z.heights.back() + shape[i]);
  return z;
}

Shape shape_of(const WalkerState& z) {
  if (!in_state_space(z)) throw InvariantError("walker state violates |z(i+1) - z(i)| = 1");
  std::vector<int> entries;
  entries.reserve(z.heights.size() - 1);
  for (std::size_t i = 0; i + 1 < z.heights.size(); ++i) {
    entries.push_back(static_cast<int>(z.heights[i + 1] - z.heights[i]));
  }
  return Shape::from_entries(entries);
}

WalkerState chain_step(const ShapeGraph& g, const WalkerState& z, RandomStream& rng) {
  const Shape s = shape_of(z);
  if (s.order() != g.order()) throw DimensionError("chain_step: walker count differs from graph");
  const auto edges = g.out_edges(s.mask());
  const EdgeRecord& e = edges[rng.below(edges.size())];
  return walker_from_shape(g.shape(e.head), z.heights.front() + e.a_value);
}

std::vector<WalkerState> walker_successors(const WalkerState& z) {
  if (!in_state_space(z)) throw InvariantError("walker state violates |z(i+1) - z(i)| = 1");
  const std::size_t walkers = z.heights.size();
  if (walkers > 24) throw CapacityError("walker_successors: too many walkers to enumerate");
  std::vector<WalkerState> out;
  for (std::uint32_t pattern = 0; pattern < (1u << walkers); ++pattern) {
    WalkerState next = z;
    for (std::size_t i = 0; i < walkers; ++i) next.heights[i] += ((pattern >> i) & 1u) ? 1 : -1;
    if (in_state_space(next)) out.push_back(std::move(next));
  }
  return out;
}

GraphWalkState graph_walk_step(const ShapeGraph& g, const GraphWalkState& s, RandomStream& rng) {
  if (s.shape.order() != g.order()) throw DimensionError("graph_walk_step: shape order differs");
  const auto edges = g.out_edges(s.shape.mask());
  const EdgeRecord& e = edges[rng.below(edges.size())];
  return GraphWalkState{g.shape(e.head), s.height + e.a_value};
}

std::string_view representation_name(Representation r) {
  return r == Representation::walker ? "walker" : "graph";
}

Representation parse_representation(std::string_view text) {
  if (text == "walker") return Representation::walker;
  if (text == "graph") return Representation::graph;
  throw std::invalid_argument("representation must be 'walker' or 'graph'");
}

Rational TransitionKernel::probability(const Shape& from, const Shape& to, int delta) const {
  const auto it = entries.find(KernelKey{from.mask(), to.mask(), delta});
  return it == entries.end() ? Rational(0) : it->second;
}

Rational TransitionKernel::row_sum(const Shape& from) const {
  Rational sum = 0;
  for (auto it = entries.lower_bound(KernelKey{from.mask(), 0, -2});
       it != entries.end() && it->first.from == from.mask(); ++it) {
    sum += it->second;
  }
  return sum;
}

TransitionKernel transition_kernel(int order, Representation representation) {
  check_order(order, kMaxKernelOrder);
  TransitionKernel kernel;
  kernel.order = order;
  const std::uint32_t n = 1u << order;
  if (representation == Representation::walker) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const WalkerState z = walker_from_shape(Shape::from_mask(order, v));
      const auto successors = walker_successors(z);
      const Rational p(1, static_cast<unsigned long>(successors.size()));
      for (const WalkerState& next : successors) {
        const auto delta = static_cast<int>(next.heights.front() - z.heights.front());
        kernel.entries[KernelKey{v, shape_of(next).mask(), delta}] += p;
      }
    }
  } else {
    const ShapeGraph g = build_graph(order);
    for (std::uint32_t v = 0; v < n; ++v) {
      const auto edges = g.out_edges(v);
      const Rational p(1, static_cast<unsigned long>(edges.size()));
      for (const EdgeRecord& e : edges) kernel.entries[KernelKey{v, e.head, e.a_value}] += p;
    }
  }
  return kernel;
}

namespace {

template <class T>
Potential<T> residuals(const ShapeGraph& g, const Potential<T>& f) {
  const EdgeField<T> b = field_A<T>(g) - gradient(g, f);
  const Potential<T> div = divergence(b);
  std::vector<T> out(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    out[v] = div[v] / T(static_cast<long>(g.degree(v)));
  }
  return Potential<T>(g.order(), std::move(out));
}

}  // namespace

Potential<Rational> martingale_residuals(const ShapeGraph& g, const Potential<Rational>& f) {
  if (f.order() != g.order()) throw DimensionError("martingale_residuals: order mismatch");
  return residuals(g, f);
}

Potential<double> martingale_residuals(const ShapeGraph& g, const Potential<double>& f) {
  if (f.order() != g.order()) throw DimensionError("martingale_residuals: order mismatch");
  return residuals(g, f);
}

StationarySampler::StationarySampler(const ShapeGraph& g) : graph_(&g) {}

std::uint32_t StationarySampler::sample(RandomStream& rng) const {
  const auto offsets = graph_->offsets();
  const std::uint64_t edge = rng.below(graph_->total_directed_edges());
  const auto it = std::upper_bound(offsets.begin(), offsets.end(), edge);
  return static_cast<std::uint32_t>(it - offsets.begin() - 1);
}

Rational StationarySampler::probability(std::uint32_t vertex) const {
  Rational p(static_cast<unsigned long>(graph_->degree(vertex)),
             static_cast<unsigned long>(graph_->total_directed_edges()));
  p.canonicalize();
  return p;
}

std::vector<std::int64_t> sample_displacements(const ShapeGraph& g, std::int64_t steps,
                                               std::int64_t trials, std::uint64_t seed,
                                               unsigned threads) {
  if (steps < 0) throw PreconditionError("steps must be non-negative");
  if (trials < 1) throw PreconditionError("at least one trial is required");
  std::vector<std::int64_t> out(static_cast<std::size_t>(trials));
  const StationarySampler sampler(g);

  auto run = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t t = begin; t < end; ++t) {
      RandomStream rng = RandomStream::derive(seed, static_cast<std::uint64_t>(t));
      std::uint32_t v = sampler.sample(rng);
      std::int64_t height = 0;
      for (std::int64_t s = 0; s < steps; ++s) {
        const auto edges = g.out_edges(v);
        const EdgeRecord& e = edges[rng.below(edges.size())];
        height += e.a_value;
        v = e.head;
      }
      out[static_cast<std::size_t>(t)] = height;
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, trials));
  if (workers <= 1) {
    run(0, trials);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t begin = trials * w / workers;
    const std::int64_t end = trials * (w + 1) / workers;
    pool.emplace_back(run, begin, end);
  }
  return out;
}

SimEstimate estimate_sigma2(const ShapeGraph& g, std::int64_t steps, std::int64_t trials,
                            std::uint64_t seed, unsigned threads) {
  if (steps < 1) throw PreconditionError("estimate_sigma2 needs at least one step");
  if (trials < 2) throw PreconditionError("estimate_sigma2 needs at least two trials");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::int64_t> displacements = sample_displacements(g, steps, trials, seed, threads);

  // The displacement has mean zero by the reflection z -> -z, so its variance
  // is the raw second moment.
  double sum = 0.0;
  for (std::int64_t x : displacements) sum += static_cast<double>(x) * static_cast<double>(x);
  const double m = static_cast<double>(trials);
  const double mean_square = sum / m;
  double spread = 0.0;
  for (std::int64_t x : displacements) {
    const double d = static_cast<double>(x) * static_cast<double>(x) - mean_square;
    spread += d * d;
  }
  const double variance_of_square = spread / (m - 1.0);

  SimEstimate est;
  est.k = g.order();
  est.steps_per_trial = steps;
  est.trials = trials;
  est.point_estimate = mean_square / static_cast<double>(steps);
  est.std_error = std::sqrt(variance_of_square / m) / static_cast<double>(steps);
  est.seed = seed;
  est.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

SimEstimate estimate_sigma2(int order, std::int64_t steps, std::int64_t trials,
                            std::uint64_t seed, unsigned threads) {
  check_order(order, kDefaultMaxOrder);
  const ShapeGraph g = build_graph(order);
  return estimate_sigma2(g, steps, trials, seed, threads);
}

Trajectory simulate_trajectory(const ShapeGraph& g, std::int64_t steps, std::uint64_t seed,
                               Representation representation) {
  if (steps < 0) throw PreconditionError("steps must be non-negative");
  Trajectory out;
  out.order = g.order();
  out.seed = seed;
  out.representation = representation;
  out.points.reserve(static_cast<std::size_t>(steps) + 1);

  RandomStream rng(seed);
  const Shape initial = g.shape(StationarySampler(g).sample(rng));
  if (representation == Representation::walker) {
    const auto path = simulate_walker(g, walker_from_shape(initial), steps, rng);
    for (std::size_t i = 0; i < path.size(); ++i) {
      out.points.push_back({static_cast<std::int64_t>(i), path[i].heights.front(), shape_of(path[i])});
    }
  } else {
    GraphWalkState s{initial, 0};
    out.points.push_back({0, s.height, s.shape});
    for (std::int64_t i = 1; i <= steps; ++i) {
      s = graph_walk_step(g, s, rng);
      out.points.push_back({i, s.height, s.shape});
    }
  }
  return out;
}

std::vector<WalkerState> simulate_walker(const ShapeGraph& g, const WalkerState& start,
                                         std::int64_t steps, RandomStream& rng) {
  if (steps < 0) throw PreconditionError("steps must be non-negative");
  std::vector<WalkerState> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  path.push_back(start);
  for (std::int64_t i = 0; i < steps; ++i) path.push_back(chain_step(g, path.back(), rng));
  return path;
}

std::vector<IncrementStats> martingale_increment_stats(const ShapeGraph& g,
                                                       const Potential<double>& f,
                                                       std::int64_t steps, std::uint64_t seed) {
  if (f.order() != g.order()) throw DimensionError("martingale_increment_stats: order mismatch");
  const std::size_t n = g.vertex_count();
  std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
  std::vector<std::int64_t> count(n, 0);

  RandomStream rng(seed);
  std::uint32_t v = StationarySampler(g).sample(rng);
  for (std::int64_t s = 0; s < steps; ++s) {
    const auto edges = g.out_edges(v);
    const EdgeRecord& e = edges[rng.below(edges.size())];
    const double increment = e.a_value - (f[e.head] - f[v]);
    sum[v] += increment;
    sum_sq[v] += increment * increment;
    ++count[v];
    v = e.head;
  }

  std::vector<IncrementStats> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].count = count[i];
    if (count[i] == 0) continue;
    const double c = static_cast<double>(count[i]);
    out[i].mean = sum[i] / c;
    if (count[i] > 1) {
      const double variance = std::max(0.0, (sum_sq[i] - c * out[i].mean * out[i].mean) / (c - 1.0));
      out[i].std_error = std::sqrt(variance / c);
    }
  }
  return out;
}

}  // namespace shapewalk

namespace shapewalk {

Rational exact_displacement_second_moment(const ShapeGraph& g, int steps) {
  if (steps < 0) throw PreconditionError("steps must be non-negative");
  if (steps > 64) throw CapacityError("exact moment is tabulated for at most 64 steps");
  const std::size_t n = g.vertex_count();
  const auto width = static_cast<std::size_t>(2 * steps + 1);
  const auto offset = static_cast<std::size_t>(steps);

  std::vector<Rational> law(n * width, Rational(0));
  const StationarySampler sampler(g);
  for (std::uint32_t v = 0; v < n; ++v) law[v * width + offset] = sampler.probability(v);

  for (int s = 0; s < steps; ++s) {
    std::vector<Rational> next(n * width, Rational(0));
    for (std::uint32_t v = 0; v < n; ++v) {
      const auto edges = g.out_edges(v);
      const Rational p(1, static_cast<unsigned long>(edges.size()));
      for (std::size_t h = 0; h < width; ++h) {
        const Rational& mass = law[v * width + h];
        if (sgn(mass) == 0) continue;
        for (const EdgeRecord& e : edges) {
          const std::size_t target = e.a_value > 0 ? h + 1 : h - 1;
          next[e.head * width + target] += mass * p;
        }
      }
    }
    law = std::move(next);
  }

  Rational moment = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::size_t h = 0; h < width; ++h) {
      const long x = static_cast<long>(h) - static_cast<long>(offset);
      moment += law[v * width + h] * Rational(x * x);
    }
  }
  return moment;
}

}  // namespace shapewalk
