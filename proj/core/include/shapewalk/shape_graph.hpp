#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shapewalk/shape.hpp"

namespace shapewalk {

/// Hard ceiling on the graph order; memory grows as 3^K.
inline constexpr int kHardMaxOrder = 20;
/// Order above which the command-line tool refuses to materialize a graph.
inline constexpr int kDefaultMaxOrder = 14;

/// Oriented edge of G_K, either a move between distinct shapes or a signed loop.
struct SignedEdge {
  Shape tail;
  Shape head;
  /// Value of A on this edge: +1 on E_K^+, -1 on E_K^-.
  int a_value = 0;
  bool loop = false;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Compact adjacency record. `canonical` indexes the E^+ representative of
/// the edge pair (the edge itself when a_value is +1, its reverse or the
/// (a,a)^+ loop otherwise).
struct EdgeRecord {
  std::uint32_t head = 0;
  std::uint32_t canonical = 0;
  std::int8_t a_value = 0;
  bool loop = false;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// E^+ representative of a pair of opposite edges, addressed by vertex mask.
struct CanonicalEdge {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  bool loop = false;
};

/// The multigraph G_K = (V_K, E_K^+, E_K^-). Immutable once built.
///
/// Vertices are addressed by mask; vertices() lists them in lexicographic
/// order. Each vertex's out-edges are stored loops first ((a,a)^+ then
/// (a,a)^-), then moves sorted lexicographically by head.
class ShapeGraph {
 public:
  int order() const noexcept { return order_; }
  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }

  /// All 2^K shapes in lexicographic order.
  const std::vector<Shape>& vertices() const noexcept { return vertices_; }

  std::span<const EdgeRecord> out_edges(std::uint32_t vertex) const;
  std::size_t degree(std::uint32_t vertex) const;

  /// D_K: directed edges counted with both loop copies.
  std::size_t total_directed_edges() const noexcept { return edges_.size(); }
  /// delta_K: E^+ moves from the facet {1a'} to the facet {(-1)b'}.
  std::size_t crossing_count() const noexcept { return crossing_count_; }

  std::span<const CanonicalEdge> canonical_edges() const noexcept { return canonical_; }
  std::size_t canonical_edge_count() const noexcept { return canonical_.size(); }

  /// Prefix sums of vertex degrees indexed by mask; offsets()[v+1]-offsets()[v] = degree(v).
  std::span<const std::size_t> offsets() const noexcept { return offsets_; }

  Shape shape(std::uint32_t vertex) const { return Shape::from_mask(order_, vertex); }

  /// Equality as labeled multigraphs (same order, same signed out-edge lists).
  friend bool operator==(const ShapeGraph& a, const ShapeGraph& b);

  /// Assembles a graph from per-vertex out-edge lists (indexed by mask).
  /// Sorts each list into canonical order and links reverse edges.
  static ShapeGraph from_adjacency(int order, std::vector<std::vector<EdgeRecord>> lists);

 private:
  ShapeGraph() = default;

  int order_ = 0;
  std::vector<Shape> vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeRecord> edges_;
  std::vector<CanonicalEdge> canonical_;
  std::size_t crossing_count_ = 0;
};

/// Classifies the ordered pair (a, b) with a != b: +1 for E^+, -1 for E^-,
/// nullopt if it is not an edge (loops are not classified here).
std::optional<int> edge_sign(const Shape& a, const Shape& b);

/// G_K built from the direct definition of E_K^+ and E_K^-.
ShapeGraph build_graph(int order);

/// G_K built from G_1 by iterating the facet recurrence on E^+.
ShapeGraph build_graph_inductive(int order);

/// Every edge with tail `a`, in adjacency order.
std::vector<SignedEdge> neighbors(const ShapeGraph& g, const Shape& a);

/// Counts alpha_k(a) / alpha_bar_k(a) of E^+ / E^- edges leaving a whose
/// head differs from a in exactly k digits (loops at k = 0).
struct DegreeProfile {
  int order = 0;
  std::vector<int> alpha;      // size K+1
  std::vector<int> alpha_bar;  // size K+1

  int alpha_total() const;
  int alpha_bar_total() const;
  int alpha_even() const;
  int alpha_odd() const;
  int alpha_bar_even() const;
  int alpha_bar_odd() const;
};

DegreeProfile degree_profile(const ShapeGraph& g, const Shape& a);

void check_order(int order, int max_order = kHardMaxOrder);

}  // namespace shapewalk
