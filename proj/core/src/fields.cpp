#include "shapewalk/fields.hpp"

#include <unordered_map>

#include "shapewalk/errors.hpp"

namespace shapewalk {
namespace {

void require_same_graph(const ShapeGraph& a, const ShapeGraph& b) {
  if (&a != &b) throw IncompatibleError("edge fields live on different graphs");
}

std::vector<char> membership(int order, std::span<const Shape> set) {
  std::vector<char> in(std::size_t{1} << order, 0);
  for (const Shape& s : set) {
    if (s.order() != order) throw DimensionError("vertex set has the wrong shape order");
    in[s.mask()] = 1;
  }
  return in;
}

template <class T>
T normalized(T sum, std::size_t directed_edges) {
  if constexpr (std::is_same_v<T, Rational>) {
    Rational out = sum * Rational(2, static_cast<unsigned long>(directed_edges));
    out.canonicalize();
    return out;
  } else {
    return 2.0 * sum / static_cast<double>(directed_edges);
  }
}

}  // namespace

template <class T>
EdgeField<T>::EdgeField(const ShapeGraph& graph, std::vector<T> canonical_values)
    : graph_(&graph), values_(std::move(canonical_values)) {
  if (values_.size() != graph.canonical_edge_count()) {
    throw DimensionError("edge field needs one value per canonical edge");
  }
}

template <class T>
EdgeField<T>& EdgeField<T>::operator+=(const EdgeField& other) {
  require_same_graph(*graph_, *other.graph_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

template <class T>
EdgeField<T>& EdgeField<T>::operator-=(const EdgeField& other) {
  require_same_graph(*graph_, *other.graph_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

template <class T>
Potential<T>::Potential(int order, std::vector<T> values_by_mask)
    : order_(order), values_(std::move(values_by_mask)) {
  check_order(order);
  if (values_.size() != (std::size_t{1} << order)) {
    throw DimensionError("potential needs one value per vertex of V_K");
  }
}

template <class T>
Potential<T> Potential<T>::constant(int order, const T& value) {
  check_order(order);
  return Potential(order, std::vector<T>(std::size_t{1} << order, value));
}

template <class T>
const T& Potential<T>::at(const Shape& a) const {
  if (a.order() != order_) throw DimensionError("potential evaluated at a shape of the wrong order");
  return values_[a.mask()];
}

template <class T>
Potential<T> Potential<T>::shifted(const T& shift) const {
  std::vector<T> out(values_);
  for (T& v : out) v += shift;
  return Potential(order_, std::move(out));
}

template <class T>
EdgeField<T> field_A(const ShapeGraph& g) {
  return EdgeField<T>(g, std::vector<T>(g.canonical_edge_count(), T(1)));
}

template <class T>
EdgeField<T> gradient(const ShapeGraph& g, const Potential<T>& f) {
  if (f.order() != g.order()) throw DimensionError("gradient: potential order differs from graph");
  std::vector<T> values;
  values.reserve(g.canonical_edge_count());
  for (const CanonicalEdge& e : g.canonical_edges()) {
    if (e.loop) {
      values.emplace_back(0);
    } else {
      values.emplace_back(f[e.head] - f[e.tail]);
    }
  }
  return EdgeField<T>(g, std::move(values));
}

template <class T>
Potential<T> divergence(const EdgeField<T>& field) {
  const ShapeGraph& g = field.graph();
  const auto values = field.canonical_values();
  std::vector<T> out(g.vertex_count(), T(0));
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    T& sum = out[v];
    for (const EdgeRecord& e : g.out_edges(v)) {
      if (e.a_value > 0) {
        sum += values[e.canonical];
      } else {
        sum -= values[e.canonical];
      }
    }
  }
  return Potential<T>(g.order(), std::move(out));
}

template <class T>
T inner_product(const EdgeField<T>& a, const EdgeField<T>& b) {
  require_same_graph(a.graph(), b.graph());
  const auto x = a.canonical_values();
  const auto y = b.canonical_values();
  T sum(0);
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return normalized(std::move(sum), a.graph().total_directed_edges());
}

template <class T>
T flux(const EdgeField<T>& field, std::span<const Shape> from, std::span<const Shape> to) {
  const ShapeGraph& g = field.graph();
  const auto in_from = membership(g.order(), from);
  const auto in_to = membership(g.order(), to);
  for (std::size_t v = 0; v < in_from.size(); ++v) {
    if (in_from[v] && in_to[v]) throw PreconditionError("flux: vertex sets must be disjoint");
  }
  T sum(0);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!in_from[v]) continue;
    for (const EdgeRecord& e : g.out_edges(v)) {
      if (in_to[e.head]) sum += field.value(e);
    }
  }
  return sum;
}

template <class T>
bool is_stationary(const EdgeField<T>& field, double tolerance) {
  const ShapeGraph& g = field.graph();
  // A displacement in {-2,0,2}^K is fixed by the changed digits and the head's digits there.
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  const auto edges = g.canonical_edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const CanonicalEdge& e = edges[id];
    if (e.loop) continue;
    const std::uint64_t diff = e.tail ^ e.head;
    const std::uint64_t key = (diff << 32) | (e.head & diff);
    const auto [it, inserted] = first_seen.emplace(key, id);
    if (inserted) continue;
    const T& reference = field.canonical(it->second);
    const T& current = field.canonical(id);
    if constexpr (std::is_same_v<T, Rational>) {
      (void)tolerance;
      if (reference != current) return false;
    } else {
      if (!scalar_equal(reference, current, tolerance)) return false;
    }
  }
  return true;
}

EdgeField<double> to_float(const EdgeField<Rational>& field) {
  std::vector<double> out;
  out.reserve(field.canonical_values().size());
  for (const Rational& v : field.canonical_values()) out.push_back(v.get_d());
  return EdgeField<double>(field.graph(), std::move(out));
}

Potential<double> to_float(const Potential<Rational>& f) {
  std::vector<double> out;
  out.reserve(f.size());
  for (const Rational& v : f.values()) out.push_back(v.get_d());
  return Potential<double>(f.order(), std::move(out));
}

std::vector<Shape> digit_facet(int order, int index, int digit) {
  check_order(order);
  if (index < 0 || index >= order) throw DimensionError("digit index out of range");
  std::vector<Shape> out;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << order); ++v) {
    const bool plus = (v >> index) & 1u;
    if (plus == (digit > 0)) out.push_back(Shape::from_mask(order, v));
  }
  return out;
}

std::vector<Shape> complement(int order, std::span<const Shape> subset) {
  const auto in = membership(order, subset);
  std::vector<Shape> out;
  for (std::uint32_t v = 0; v < in.size(); ++v) {
    if (!in[v]) out.push_back(Shape::from_mask(order, v));
  }
  return out;
}

#define SHAPEWALK_INSTANTIATE_FIELDS(T)                                                  \
  template class EdgeField<T>;                                                           \
  template class Potential<T>;                                                           \
  template EdgeField<T> field_A<T>(const ShapeGraph&);                                   \
  template EdgeField<T> gradient<T>(const ShapeGraph&, const Potential<T>&);             \
  template Potential<T> divergence<T>(const EdgeField<T>&);                              \
  template T inner_product<T>(const EdgeField<T>&, const EdgeField<T>&);                 \
  template T flux<T>(const EdgeField<T>&, std::span<const Shape>, std::span<const Shape>); \
  template bool is_stationary<T>(const EdgeField<T>&, double);

SHAPEWALK_INSTANTIATE_FIELDS(Rational)
SHAPEWALK_INSTANTIATE_FIELDS(double)

#undef SHAPEWALK_INSTANTIATE_FIELDS

}  // namespace shapewalk
