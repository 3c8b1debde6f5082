#include "shapewalk/diffusivity.hpp"

#include "shapewalk/errors.hpp"
#include "shapewalk/potentials.hpp"

namespace shapewalk {

DiffusivityReport sigma_squared_exact(const ShapeGraph& g, const HodgeOptions& options) {
  const EdgeField<Rational> a = field_A<Rational>(g);
  const HodgeDecomposition<Rational> hodge = hodge_decompose(g, a, options);
  DiffusivityReport r;
  r.order = g.order();
  r.a_norm2 = inner_product(a, a);
  r.a_dot_grad = inner_product(a, hodge.gradient);
  r.sigma2 = r.a_norm2 - r.a_dot_grad;
  r.b_norm2 = inner_product(hodge.divergence_free, hodge.divergence_free);
  return r;
}

DiffusivityReport sigma_squared_exact(int order, const HodgeOptions& options) {
  check_order(order, options.max_exact_order);
  const ShapeGraph g = build_graph(order);
  return sigma_squared_exact(g, options);
}

Rational sigma_squared_closed_form(int order) {
  if (order < 1) throw DimensionError("order must be positive");
  Rational out(2, order + 2);
  out.canonicalize();
  return out;
}

Rational positive_edge_average(const EdgeField<Rational>& field) {
  Rational sum = 0;
  for (const Rational& v : field.canonical_values()) sum += v;
  Rational out = sum * Rational(2, static_cast<unsigned long>(field.graph().total_directed_edges()));
  out.canonicalize();
  return out;
}

Rational facet_decomposition_value(const ShapeGraph& g) {
  const int k = g.order();
  const std::size_t lower_positive = k == 1 ? 1 : build_graph(k - 1).canonical_edge_count();
  const auto d = static_cast<unsigned long>(g.total_directed_edges());
  Rational out = Rational(4 * static_cast<long>(lower_positive), d) * closed_form_increment(k, 1) -
                 Rational(2 * static_cast<long>(g.crossing_count()), d);
  out.canonicalize();
  return out;
}

}  // namespace shapewalk
