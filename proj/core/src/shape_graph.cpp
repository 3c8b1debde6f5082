#include "shapewalk/shape_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "shapewalk/errors.hpp"

namespace shapewalk {
namespace {

constexpr std::uint32_t kUnassigned = ~0u;

bool bit(std::uint32_t mask, int i) { return (mask >> i) & 1u; }

// Sign of the move a -> a ^ diff, or 0 if the digits of a on diff do not alternate.
int move_sign(std::uint32_t a, std::uint32_t diff) {
  if (diff == 0) return 0;
  int previous = -1;
  for (std::uint32_t rest = diff; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const int value = bit(a, i) ? 1 : 0;
    if (value == previous) return 0;
    previous = value;
  }
  // The first differing digit of b - a is -2 exactly when a has +1 there.
  return bit(a, std::countr_zero(diff)) ? 1 : -1;
}

// Appends every diff mask over positions >= start on which the digits of a
// alternate, continuing from a digit equal to `last` (-1 = none yet).
void collect_moves(std::uint32_t a, int order, int start, int last, std::uint32_t diff,
                   std::vector<EdgeRecord>& out) {
  for (int i = start; i < order; ++i) {
    const int value = bit(a, i) ? 1 : 0;
    if (value == last) continue;
    const std::uint32_t next = diff | (1u << i);
    out.push_back(EdgeRecord{a ^ next, 0, static_cast<std::int8_t>(move_sign(a, next)), false});
    collect_moves(a, order, i + 1, value, next, out);
  }
}

bool adjacency_less(const EdgeRecord& x, const EdgeRecord& y) {
  if (x.loop != y.loop) return x.loop;
  if (x.loop) return x.a_value > y.a_value;
  return lex_less(x.head, y.head);
}

}  // namespace

void check_order(int order, int max_order) {
  if (order < 1 || order > max_order) {
    throw CapacityError("graph order must be in [1, " + std::to_string(max_order) + "], got " +
                        std::to_string(order));
  }
}

std::span<const EdgeRecord> ShapeGraph::out_edges(std::uint32_t vertex) const {
  if (vertex >= vertex_count()) throw DimensionError("vertex outside V_K");
  return {edges_.data() + offsets_[vertex], offsets_[vertex + 1] - offsets_[vertex]};
}

std::size_t ShapeGraph::degree(std::uint32_t vertex) const { return out_edges(vertex).size(); }

bool operator==(const ShapeGraph& a, const ShapeGraph& b) {
  return a.order_ == b.order_ && a.offsets_ == b.offsets_ && a.edges_ == b.edges_;
}

ShapeGraph ShapeGraph::from_adjacency(int order, std::vector<std::vector<EdgeRecord>> lists) {
  check_order(order);
  const std::size_t n = std::size_t{1} << order;
  if (lists.size() != n) throw DimensionError("adjacency must list every vertex of V_K");

  ShapeGraph g;
  g.order_ = order;
  g.vertices_.reserve(n);
  for (std::uint32_t v = 0; v < n; ++v) g.vertices_.push_back(Shape::from_mask(order, v));
  std::sort(g.vertices_.begin(), g.vertices_.end());

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(lists[v].begin(), lists[v].end(), adjacency_less);
    g.offsets_[v + 1] = g.offsets_[v] + lists[v].size();
  }
  g.edges_.reserve(g.offsets_[n]);
  for (auto& list : lists) {
    for (auto& e : list) {
      e.canonical = kUnassigned;
      g.edges_.push_back(e);
    }
    std::vector<EdgeRecord>().swap(list);
  }

  // Canonical ids follow lexicographic vertex order, then adjacency order.
  for (const Shape& s : g.vertices_) {
    const std::uint32_t v = s.mask();
    for (std::size_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
      EdgeRecord& e = g.edges_[i];
      if (e.a_value != 1) continue;
      e.canonical = static_cast<std::uint32_t>(g.canonical_.size());
      g.canonical_.push_back(CanonicalEdge{v, e.head, e.loop});
      if (!e.loop && bit(v, 0) && !bit(e.head, 0)) ++g.crossing_count_;
    }
  }

  std::size_t negative = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::size_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
      EdgeRecord& e = g.edges_[i];
      if (e.a_value == 1) continue;
      if (e.a_value != -1) throw InvariantError("edge value must be +1 or -1");
      ++negative;
      if (e.loop) {
        const EdgeRecord& first = g.edges_[g.offsets_[v]];
        if (e.head != v || !first.loop || first.a_value != 1) {
          throw InvariantError("each vertex needs a (a,a)^+ loop to pair with (a,a)^-");
        }
        e.canonical = first.canonical;
        continue;
      }
      const auto begin = g.edges_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[e.head]);
      const auto end = g.edges_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[e.head + 1]);
      const EdgeRecord probe{v, 0, 0, false};
      const auto it = std::lower_bound(begin, end, probe, adjacency_less);
      if (it == end || it->loop || it->head != v || it->a_value != 1) {
        throw InvariantError("move edge without an opposite-sign reverse edge");
      }
      e.canonical = it->canonical;
    }
  }
  if (negative != g.canonical_.size()) {
    throw InvariantError("E^+ and E^- must pair up edge for edge");
  }
  return g;
}

std::optional<int> edge_sign(const Shape& a, const Shape& b) {
  if (a.order() != b.order()) throw DimensionError("edge_sign: shapes of different order");
  const int sign = move_sign(a.mask(), a.mask() ^ b.mask());
  if (sign == 0) return std::nullopt;
  return sign;
}

ShapeGraph build_graph(int order) {
  check_order(order);
  const std::size_t n = std::size_t{1} << order;
  std::vector<std::vector<EdgeRecord>> lists(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto& list = lists[a];
    list.push_back(EdgeRecord{a, 0, 1, true});
    list.push_back(EdgeRecord{a, 0, -1, true});
    collect_moves(a, order, 0, -1, 0, list);
  }
  return ShapeGraph::from_adjacency(order, std::move(lists));
}

ShapeGraph build_graph_inductive(int order) {
  check_order(order);

  struct Arc {
    std::uint32_t tail;
    std::uint32_t head;
    bool loop;
  };
  // G_1: E^+ holds the move (1) -> (-1) and both (a,a)^+ loops.
  std::vector<Arc> positive{{1, 0, false}, {0, 0, true}, {1, 1, true}};
  std::vector<Arc> negative{{0, 1, false}, {0, 0, true}, {1, 1, true}};

  for (int k = 1; k < order; ++k) {
    // Prepending digit d maps mask m to (m << 1) | [d = +1].
    auto up = [](std::uint32_t m) { return (m << 1) | 1u; };
    auto down = [](std::uint32_t m) { return m << 1; };
    std::vector<Arc> next;
    next.reserve(3 * positive.size());
    for (const Arc& e : positive) next.push_back({up(e.tail), up(e.head), e.loop});
    for (const Arc& e : positive) next.push_back({down(e.tail), down(e.head), e.loop});
    for (const Arc& e : negative) next.push_back({up(e.tail), down(e.head), false});
    positive = std::move(next);

    negative.clear();
    negative.reserve(positive.size());
    for (const Arc& e : positive) negative.push_back({e.head, e.tail, e.loop});
  }

  std::vector<std::vector<EdgeRecord>> lists(std::size_t{1} << order);
  for (const Arc& e : positive) lists[e.tail].push_back(EdgeRecord{e.head, 0, 1, e.loop});
  for (const Arc& e : negative) lists[e.tail].push_back(EdgeRecord{e.head, 0, -1, e.loop});
  return ShapeGraph::from_adjacency(order, std::move(lists));
}

std::vector<SignedEdge> neighbors(const ShapeGraph& g, const Shape& a) {
  if (a.order() != g.order()) throw DimensionError("neighbors: shape order differs from graph");
  std::vector<SignedEdge> out;
  const auto edges = g.out_edges(a.mask());
  out.reserve(edges.size());
  for (const EdgeRecord& e : edges) {
    out.push_back(SignedEdge{a, g.shape(e.head), e.a_value, e.loop});
  }
  return out;
}

namespace {
int sum_parity(const std::vector<int>& v, int parity) {
  int total = 0;
  for (std::size_t k = static_cast<std::size_t>(parity); k < v.size(); k += 2) total += v[k];
  return total;
}
}  // namespace

int DegreeProfile::alpha_total() const { return sum_parity(alpha, 0) + sum_parity(alpha, 1); }
int DegreeProfile::alpha_bar_total() const {
  return sum_parity(alpha_bar, 0) + sum_parity(alpha_bar, 1);
}
int DegreeProfile::alpha_even() const { return sum_parity(alpha, 0); }
int DegreeProfile::alpha_odd() const { return sum_parity(alpha, 1); }
int DegreeProfile::alpha_bar_even() const { return sum_parity(alpha_bar, 0); }
int DegreeProfile::alpha_bar_odd() const { return sum_parity(alpha_bar, 1); }

DegreeProfile degree_profile(const ShapeGraph& g, const Shape& a) {
  if (a.order() != g.order()) throw DimensionError("degree_profile: shape order differs from graph");
  DegreeProfile p;
  p.order = g.order();
  p.alpha.assign(static_cast<std::size_t>(g.order()) + 1, 0);
  p.alpha_bar.assign(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const EdgeRecord& e : g.out_edges(a.mask())) {
    const int k = std::popcount(a.mask() ^ e.head);
    (e.a_value > 0 ? p.alpha : p.alpha_bar)[static_cast<std::size_t>(k)] += 1;
  }
  return p;
}

}  // namespace shapewalk
