#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "shapewalk/fields.hpp"
#include "shapewalk/rng.hpp"
#include "shapewalk/shape_graph.hpp"

namespace shapewalk {

/// Heights (Z^(1), ..., Z^(K+1)) of the K+1 walkers.
struct WalkerState {
  std::vector<std::int64_t> heights;

  int order() const noexcept { return static_cast<int>(heights.size()) - 1; }
  friend bool operator==(const WalkerState&, const WalkerState&) = default;
};

/// True when consecutive heights differ by exactly one.
bool in_state_space(const WalkerState& z);

/// The walker configuration with the given shape and first height.
WalkerState walker_from_shape(const Shape& shape, std::int64_t first_height = 0);

/// (z2 - z1, ..., z_{K+1} - z_K). Throws InvariantError outside S_K.
Shape shape_of(const WalkerState& z);

/// Shape of the walker chain plus the cumulative sum of A along the graph walk.
struct GraphWalkState {
  Shape shape;
  std::int64_t height = 0;

  friend bool operator==(const GraphWalkState&, const GraphWalkState&) = default;
};

/// One step of the constrained chain: all K+1 walkers move by +-1, uniformly
/// among the valid successors. Successors come from the graph adjacency of
/// shape_of(z).
WalkerState chain_step(const ShapeGraph& g, const WalkerState& z, RandomStream& rng);

/// Every z' in S_K with |z'_i - z_i| = 1 for all i, found by scanning all
/// 2^(K+1) sign patterns.
std::vector<WalkerState> walker_successors(const WalkerState& z);

/// One step of the simple random walk on G_K (loops counted once each).
GraphWalkState graph_walk_step(const ShapeGraph& g, const GraphWalkState& s, RandomStream& rng);

enum class Representation { walker, graph };

std::string_view representation_name(Representation r);
Representation parse_representation(std::string_view text);

/// Largest order for which transition kernels are tabulated.
inline constexpr int kMaxKernelOrder = 6;

struct KernelKey {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  int delta = 0;  // increment of Z^(1)

  friend auto operator<=>(const KernelKey&, const KernelKey&) = default;
};

/// Transition probabilities from a shape to (next shape, increment of Z^(1)).
struct TransitionKernel {
  int order = 0;
  std::map<KernelKey, Rational> entries;

  Rational probability(const Shape& from, const Shape& to, int delta) const;
  Rational row_sum(const Shape& from) const;

  friend bool operator==(const TransitionKernel&, const TransitionKernel&) = default;
};

/// Walker kernel: enumerates successors of walker_from_shape(a) by brute force.
/// Graph kernel: one entry of 1/deg(a) per out-edge of a in G_K.
TransitionKernel transition_kernel(int order, Representation representation);

/// Per shape a, the mean of B = A - grad f over the out-edges of a, i.e.
/// (div B)(a) / deg(a). Vanishes identically when f is the Hodge potential of A.
Potential<Rational> martingale_residuals(const ShapeGraph& g, const Potential<Rational>& f);
Potential<double> martingale_residuals(const ShapeGraph& g, const Potential<double>& f);

/// Draws shapes from the degree-proportional law, the invariant law of the
/// shape chain. A draw picks a uniform directed edge and returns its tail.
class StationarySampler {
 public:
  explicit StationarySampler(const ShapeGraph& g);

  std::uint32_t sample(RandomStream& rng) const;
  Rational probability(std::uint32_t vertex) const;

 private:
  const ShapeGraph* graph_;
};

struct SimEstimate {
  int k = 0;
  std::int64_t steps_per_trial = 0;
  std::int64_t trials = 0;
  /// Mean of (Z^(1)_n - Z^(1)_0)^2 over trials, divided by n.
  double point_estimate = 0.0;
  /// Standard error from the sample variance of the squared displacement.
  double std_error = 0.0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

/// Displacement Z^(1)_n - Z^(1)_0 of each trial, started from the stationary law.
/// Trial t uses RandomStream::derive(seed, t); `threads` = 0 uses every core.
std::vector<std::int64_t> sample_displacements(const ShapeGraph& g, std::int64_t steps,
                                               std::int64_t trials, std::uint64_t seed,
                                               unsigned threads = 0);

SimEstimate estimate_sigma2(const ShapeGraph& g, std::int64_t steps, std::int64_t trials,
                            std::uint64_t seed, unsigned threads = 0);
SimEstimate estimate_sigma2(int order, std::int64_t steps, std::int64_t trials,
                            std::uint64_t seed, unsigned threads = 0);

struct TrajectoryPoint {
  std::int64_t step = 0;
  std::int64_t height = 0;
  Shape shape;
};

struct Trajectory {
  int order = 0;
  std::uint64_t seed = 0;
  Representation representation = Representation::graph;
  std::vector<TrajectoryPoint> points;
};

/// Full (shape, height) path of `steps` steps from a stationary start at height 0.
Trajectory simulate_trajectory(const ShapeGraph& g, std::int64_t steps, std::uint64_t seed,
                               Representation representation);

/// Walker-chain path from an explicit start; element 0 is `start`.
std::vector<WalkerState> simulate_walker(const ShapeGraph& g, const WalkerState& start,
                                         std::int64_t steps, RandomStream& rng);

struct IncrementStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

/// Empirical law of M_{n+1} - M_n = B(Y_n, Y_{n+1}) given Y_n along one
/// stationary walk of `steps` steps, indexed by shape mask.
std::vector<IncrementStats> martingale_increment_stats(const ShapeGraph& g,
                                                       const Potential<double>& f,
                                                       std::int64_t steps, std::uint64_t seed);

}  // namespace shapewalk

namespace shapewalk {

/// Exact E[(Z^(1)_n - Z^(1)_0)^2] under the stationary start, by propagating
/// the joint law of (shape, displacement) through `steps` transitions.
Rational exact_displacement_second_moment(const ShapeGraph& g, int steps);

}  // namespace shapewalk
