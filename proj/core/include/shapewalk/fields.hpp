#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shapewalk/scalar.hpp"
#include "shapewalk/shape_graph.hpp"

namespace shapewalk {

/// Antisymmetric function on the edges of a ShapeGraph.
///
/// Only canonical edges are stored (E^+ moves and (a,a)^+ loops, indexed as
/// in ShapeGraph::canonical_edges()); the value on the opposite edge is the
/// negation. The graph must outlive the field.
template <class T>
class EdgeField {
 public:
  EdgeField(const ShapeGraph& graph, std::vector<T> canonical_values);

  const ShapeGraph& graph() const noexcept { return *graph_; }
  static constexpr Mode mode() noexcept { return ScalarTraits<T>::mode; }

  std::span<const T> canonical_values() const& noexcept { return values_; }
  std::span<const T> canonical_values() const&& = delete;
  const T& canonical(std::size_t id) const { return values_.at(id); }

  /// Value on an oriented edge of the graph.
  T value(const EdgeRecord& e) const {
    const T& v = values_[e.canonical];
    return e.a_value > 0 ? T(v) : T(-v);
  }

  EdgeField& operator+=(const EdgeField& other);
  EdgeField& operator-=(const EdgeField& other);
  friend EdgeField operator+(EdgeField a, const EdgeField& b) { return a += b; }
  friend EdgeField operator-(EdgeField a, const EdgeField& b) { return a -= b; }
  friend bool operator==(const EdgeField& a, const EdgeField& b) {
    return a.graph_ == b.graph_ && a.values_ == b.values_;
  }

 private:
  const ShapeGraph* graph_;
  std::vector<T> values_;
};

/// Function on the vertices V_K, indexed by shape mask.
template <class T>
class Potential {
 public:
  Potential(int order, std::vector<T> values_by_mask);
  static Potential constant(int order, const T& value);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return values_.size(); }

  const T& operator[](std::uint32_t mask) const { return values_[mask]; }
  const T& at(const Shape& a) const;
  std::span<const T> values() const& noexcept { return values_; }
  std::span<const T> values() const&& = delete;

  /// Adds `shift` to every value.
  Potential shifted(const T& shift) const;

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  int order_;
  std::vector<T> values_;
};

/// A: +1 on E^+ (including (a,a)^+), -1 on E^-.
template <class T>
EdgeField<T> field_A(const ShapeGraph& g);

/// Edge field (a,b) -> f(b) - f(a); zero on loops.
template <class T>
EdgeField<T> gradient(const ShapeGraph& g, const Potential<T>& f);

/// Sum of S over every out-edge, both loops included.
template <class T>
Potential<T> divergence(const EdgeField<T>& field);

/// (1/D_K) sum over all directed edges of S S'.
template <class T>
T inner_product(const EdgeField<T>& a, const EdgeField<T>& b);

/// Sum of S(a,b) over edges with a in `from` and b in `to`. The sets must be disjoint.
template <class T>
T flux(const EdgeField<T>& field, std::span<const Shape> from, std::span<const Shape> to);

/// True when the field's value on a move depends only on head - tail.
/// Float fields compare within `tolerance`; loops are not examined.
template <class T>
bool is_stationary(const EdgeField<T>& field, double tolerance = kDefaultTolerance);

EdgeField<double> to_float(const EdgeField<Rational>& field);
Potential<double> to_float(const Potential<Rational>& f);

/// Vertices with digit `index` (zero-based) equal to `digit`.
std::vector<Shape> digit_facet(int order, int index, int digit);
/// V_K minus `subset`.
std::vector<Shape> complement(int order, std::span<const Shape> subset);

}  // namespace shapewalk
