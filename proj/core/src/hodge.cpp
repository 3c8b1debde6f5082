#include "shapewalk/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shapewalk/errors.hpp"
#include "shapewalk/linear_solve.hpp"

namespace shapewalk {
namespace {

void require_graph(const ShapeGraph& g, const ShapeGraph& field_graph) {
  if (&g != &field_graph) throw IncompatibleError("hodge_decompose: field belongs to another graph");
}

}  // namespace

HodgeDecomposition<Rational> hodge_decompose(const ShapeGraph& g, const EdgeField<Rational>& field,
                                             const HodgeOptions& options) {
  require_graph(g, field.graph());
  if (g.order() > options.max_exact_order) {
    throw CapacityError("exact Hodge decomposition is capped at K = " +
                        std::to_string(options.max_exact_order));
  }
  const std::uint32_t gauge = Shape::all_ones(g.order()).mask();
  Potential<Rational> f = solve_laplacian_exact(g, divergence(field), gauge);
  EdgeField<Rational> grad = gradient(g, f);
  EdgeField<Rational> rest = field - grad;

  const Potential<Rational> div_rest = divergence(rest);
  for (const Rational& v : div_rest.values()) {
    if (sgn(v) != 0) throw NumericError("exact Hodge solve left a nonzero divergence", v.get_d());
  }
  return {std::move(f), std::move(grad), std::move(rest), 0.0, 0};
}

HodgeDecomposition<double> hodge_decompose(const ShapeGraph& g, const EdgeField<double>& field,
                                           const HodgeOptions& options) {
  require_graph(g, field.graph());
  const std::uint32_t gauge = Shape::all_ones(g.order()).mask();
  const int max_iterations =
      options.max_iterations > 0 ? options.max_iterations
                                 : static_cast<int>(10 * g.vertex_count() + 100);
  CgReport report;
  Potential<double> f = solve_laplacian_cg(g, divergence(field), gauge, options.relative_tolerance,
                                           max_iterations, &report);
  EdgeField<double> grad = gradient(g, f);
  EdgeField<double> rest = field - grad;

  double residual = 0.0;
  const Potential<double> div_rest = divergence(rest);
  for (double v : div_rest.values()) residual = std::max(residual, std::abs(v));
  return {std::move(f), std::move(grad), std::move(rest), residual, report.iterations};
}

}  // namespace shapewalk
