#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "shapewalk/errors.hpp"
#include "shapewalk/hodge.hpp"
#include "shapewalk/potentials.hpp"
#include "shapewalk/sim.hpp"

using namespace shapewalk;

namespace {

Shape S(std::vector<int> d) { return Shape::from_entries(d); }

Rational Q(long p, unsigned long q) { return fraction(p, q); }

WalkerState W(std::vector<std::int64_t> h) { return WalkerState{std::move(h)}; }

}  // namespace

TEST(ShapeOf, Examples) {
  EXPECT_EQ(shape_of(W({0, 1, 0})), S({1, -1}));
  EXPECT_EQ(shape_of(W({5, 6, 7, 8})), S({1, 1, 1}));
  EXPECT_EQ(shape_of(W({-3, -2, -3})), shape_of(W({4, 5, 4})));
  EXPECT_THROW(shape_of(W({0, 2})), InvariantError);
}

TEST(Successors, K1Example) {
  const auto got = walker_successors(W({0, 1}));
  const std::set<std::vector<std::int64_t>> want{{1, 2}, {-1, 0}, {1, 0}};
  std::set<std::vector<std::int64_t>> have;
  for (const auto& z : got) have.insert(z.heights);
  EXPECT_EQ(have, want);
}

TEST(Successors, CountEqualsDegree) {
  for (int k = 1; k <= 6; ++k) {
    const ShapeGraph g = build_graph(k);
    for (const Shape& a : g.vertices()) {
      const WalkerState z = walker_from_shape(a, 3);
      std::vector<long> plain(z.heights.begin(), z.heights.end());
      EXPECT_EQ(walker_successors(z).size(), g.degree(a.mask()));
      EXPECT_EQ(oracle::walker_successors(plain).size(), g.degree(a.mask()));
    }
    EXPECT_EQ(walker_successors(walker_from_shape(Shape::all_ones(k))).size(),
              static_cast<std::size_t>(k + 2));
  }
  EXPECT_EQ(walker_successors(walker_from_shape(S({1, -1}))).size(), 5u);
}

TEST(ChainStep, StaysInStateSpaceAndCoversSuccessors) {
  const ShapeGraph g = build_graph(1);
  RandomStream rng(7);
  std::set<std::vector<std::int64_t>> seen;
  for (int i = 0; i < 300; ++i) {
    const WalkerState z = chain_step(g, W({0, 1}), rng);
    EXPECT_TRUE(in_state_space(z));
    seen.insert(z.heights);
  }
  const std::set<std::vector<std::int64_t>> want{{1, 2}, {-1, 0}, {1, 0}};
  EXPECT_EQ(seen, want);
}

TEST(GraphWalk, HeightMovesByOne) {
  const ShapeGraph g = build_graph(4);
  RandomStream rng(11);
  GraphWalkState s{Shape::all_ones(4), 0};
  for (int i = 0; i < 1000; ++i) {
    const GraphWalkState next = graph_walk_step(g, s, rng);
    EXPECT_EQ(std::abs(next.height - s.height), 1);
    s = next;
  }
}

TEST(Kernel, K1FromPlusOne) {
  for (Representation r : {Representation::walker, Representation::graph}) {
    const auto t = transition_kernel(1, r);
    EXPECT_EQ(t.probability(S({1}), S({1}), 1), Q(1, 3));
    EXPECT_EQ(t.probability(S({1}), S({1}), -1), Q(1, 3));
    EXPECT_EQ(t.probability(S({1}), S({-1}), 1), Q(1, 3));
    EXPECT_EQ(t.probability(S({1}), S({-1}), -1), 0);
  }
}

TEST(Kernel, RepresentationsAgree) {
  for (int k = 1; k <= 4; ++k) {
    const auto w = transition_kernel(k, Representation::walker);
    const auto g = transition_kernel(k, Representation::graph);
    EXPECT_TRUE(w == g);
    for (std::uint32_t v = 0; v < (1u << k); ++v) EXPECT_EQ(w.row_sum(Shape::from_mask(k, v)), 1);
  }
  EXPECT_THROW(transition_kernel(kMaxKernelOrder + 1, Representation::graph), CapacityError);
}

TEST(Kernel, StationaryLawIsInvariant) {
  for (int k = 1; k <= 4; ++k) {
    const ShapeGraph g = build_graph(k);
    const StationarySampler pi(g);
    const auto t = transition_kernel(k, Representation::walker);
    std::vector<Rational> next(g.vertex_count());
    for (const auto& [key, p] : t.entries) next[key.to] += pi.probability(key.from) * p;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(next[v], pi.probability(v));
  }
}

TEST(Martingale, ResidualsVanish) {
  const ShapeGraph g1 = build_graph(1);
  const auto f1 = hodge_decompose(g1, field_A<Rational>(g1)).potential;
  EXPECT_EQ(martingale_residuals(g1, f1), Potential<Rational>::constant(1, 0));
  for (int k = 2; k <= 6; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto f = closed_form_potential(k);
    EXPECT_EQ(martingale_residuals(g, f), Potential<Rational>::constant(k, 0));
    EXPECT_EQ(martingale_residuals(g, f.shifted(Q(3, 7))), Potential<Rational>::constant(k, 0));
  }
}

TEST(Martingale, NonHodgePotentialLeavesResidual) {
  const ShapeGraph g = build_graph(2);
  const auto f = Potential<Rational>::constant(2, 0);
  EXPECT_NE(martingale_residuals(g, f), Potential<Rational>::constant(2, 0));
}

TEST(Estimate, SingleStepIsExactlyOne) {
  const auto e = estimate_sigma2(3, 1, 1000, 5);
  EXPECT_EQ(e.point_estimate, 1.0);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_EQ(e.k, 3);
  EXPECT_EQ(e.seed, 5u);
}

TEST(Estimate, Preconditions) {
  EXPECT_THROW(estimate_sigma2(2, 0, 10, 1), PreconditionError);
  EXPECT_THROW(estimate_sigma2(2, 10, 1, 1), PreconditionError);
  EXPECT_THROW(estimate_sigma2(kDefaultMaxOrder + 1, 10, 10, 1), CapacityError);
}

TEST(Estimate, PositiveStdErrorBeyondOneStep) {
  const auto e = estimate_sigma2(2, 10, 100, 3);
  EXPECT_GT(e.std_error, 0.0);
}

TEST(Estimate, DeterministicAcrossThreadCounts) {
  const ShapeGraph g = build_graph(3);
  const auto a = sample_displacements(g, 50, 200, 99, 1);
  const auto b = sample_displacements(g, 50, 200, 99, 3);
  EXPECT_EQ(a, b);
  const auto c = sample_displacements(g, 50, 200, 100, 1);
  EXPECT_NE(a, c);
}

TEST(TwoStepMoment, EnumerationOracle) {
  EXPECT_EQ(oracle::path_second_moment(1, 2), Q(16, 9));
  EXPECT_EQ(oracle::path_second_moment(1, 1), 1);
  for (int k = 1; k <= 3; ++k) {
    const ShapeGraph g = build_graph(k);
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(exact_displacement_second_moment(g, n), oracle::path_second_moment(k, n));
    }
  }
}

TEST(TwoStepMoment, SimulatorWithinFourSe) {
  const ShapeGraph g = build_graph(1);
  const auto e = estimate_sigma2(g, 2, 100000, 2024);
  const double target = 16.0 / 9.0;
  EXPECT_LT(std::abs(2.0 * e.point_estimate - target), 4.0 * 2.0 * e.std_error);
}

TEST(Trajectory, ZeroSteps) {
  const ShapeGraph g = build_graph(2);
  const auto t = simulate_trajectory(g, 0, 1, Representation::graph);
  ASSERT_EQ(t.points.size(), 1u);
  EXPECT_EQ(t.points[0].height, 0);
}

TEST(Trajectory, DeterministicAndUnitIncrements) {
  const ShapeGraph g = build_graph(3);
  for (Representation r : {Representation::walker, Representation::graph}) {
    const auto a = simulate_trajectory(g, 500, 77, r);
    const auto b = simulate_trajectory(g, 500, 77, r);
    ASSERT_EQ(a.points.size(), 501u);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      EXPECT_EQ(a.points[i].height, b.points[i].height);
      EXPECT_EQ(a.points[i].shape, b.points[i].shape);
      if (i > 0) EXPECT_EQ(std::abs(a.points[i].height - a.points[i - 1].height), 1);
    }
  }
}

TEST(Trajectory, WalkerTranslationInvariance) {
  const ShapeGraph g = build_graph(3);
  const WalkerState z0 = walker_from_shape(S({1, -1, -1}), 0);
  const WalkerState z1 = walker_from_shape(S({1, -1, -1}), 17);
  RandomStream r0(123), r1(123);
  const auto p0 = simulate_walker(g, z0, 200, r0);
  const auto p1 = simulate_walker(g, z1, 200, r1);
  ASSERT_EQ(p0.size(), p1.size());
  for (std::size_t i = 0; i < p0.size(); ++i) {
    for (std::size_t j = 0; j < p0[i].heights.size(); ++j) {
      EXPECT_EQ(p1[i].heights[j], p0[i].heights[j] + 17);
    }
  }
}

TEST(Rng, BelowStaysInRangeAndDeriveIsStable) {
  RandomStream r(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
  RandomStream a = RandomStream::derive(5, 3);
  RandomStream b = RandomStream::derive(5, 3);
  RandomStream c = RandomStream::derive(5, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
}
