#include "shapewalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shapewalk/errors.hpp"
#include "shapewalk/potentials.hpp"

namespace shapewalk {

Json shape_to_json(const Shape& s) { return Json(s.entries()); }

Shape shape_from_json(const Json& j) {
  if (!j.is_array()) throw DimensionError("shape must be a JSON array of +-1");
  return Shape::from_entries(j.get<std::vector<int>>());
}

Json graph_to_json(const ShapeGraph& g) {
  Json vertices = Json::array();
  Json edges = Json::array();
  for (const Shape& s : g.vertices()) {
    vertices.push_back(shape_to_json(s));
    for (const SignedEdge& e : neighbors(g, s)) {
      edges.push_back(Json{{"tail", shape_to_json(e.tail)},
                           {"head", shape_to_json(e.head)},
                           {"a", e.a_value},
                           {"loop", e.loop}});
    }
  }
  return Json{{"k", g.order()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"d_k", g.total_directed_edges()},
              {"delta_k", g.crossing_count()}};
}

Json scalar_to_json(const Rational& v) { return to_exact_string(v); }
Json scalar_to_json(double v) { return v; }

template <class T>
Json potential_to_json(const ShapeGraph& g, const Potential<T>& f) {
  Json out = Json::object();
  for (const Shape& s : g.vertices()) out[shape_to_json(s).dump()] = scalar_to_json(f.at(s));
  return out;
}

template <class T>
Json edge_field_to_json(const EdgeField<T>& field) {
  const ShapeGraph& g = field.graph();
  Json out = Json::array();
  const auto edges = g.canonical_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.push_back(Json{{"tail", shape_to_json(g.shape(edges[i].tail))},
                       {"head", shape_to_json(g.shape(edges[i].head))},
                       {"loop", edges[i].loop},
                       {"value", scalar_to_json(field.canonical(i))}});
  }
  return out;
}

template <class T>
Json hodge_to_json(const ShapeGraph& g, const HodgeDecomposition<T>& hodge) {
  const EdgeField<T> a = field_A<T>(g);
  const EdgeField<T> reconstructed = hodge.gradient + hodge.divergence_free;
  double reconstruction = 0.0;
  for (std::size_t i = 0; i < a.canonical_values().size(); ++i) {
    reconstruction = std::max(reconstruction,
                              std::abs(to_double(T(a.canonical(i) - reconstructed.canonical(i)))));
  }
  return Json{{"k", g.order()},
              {"mode", std::string(ScalarTraits<T>::name)},
              {"potential", potential_to_json(g, hodge.potential)},
              {"divergence_free", edge_field_to_json(hodge.divergence_free)},
              {"residuals",
               {{"max_abs_divergence_b", hodge.divergence_residual},
                {"max_abs_reconstruction", reconstruction},
                {"grad_dot_b", scalar_to_json(inner_product(hodge.gradient, hodge.divergence_free))},
                {"iterations", hodge.iterations}}},
              {"a_dot_grad", scalar_to_json(inner_product(a, hodge.gradient))},
              {"b_norm2", scalar_to_json(inner_product(hodge.divergence_free, hodge.divergence_free))}};
}

std::string potential_table_csv(const ShapeGraph& g, const Potential<Rational>& f) {
  const BasePotentials base = base_potentials(g.order());
  const Potential<Rational> div_a = divergence(field_A<Rational>(g));
  std::ostringstream os;
  os << "vertex,f,f1,f2,div_a\n";
  for (const Shape& s : g.vertices()) {
    os << s.to_string() << ',' << to_exact_string(f.at(s)) << ',' << to_exact_string(base.f1.at(s))
       << ',' << to_exact_string(base.f2.at(s)) << ',' << to_exact_string(div_a.at(s)) << '\n';
  }
  return os.str();
}

std::string trajectory_to_csv(const Trajectory& t) {
  std::ostringstream os;
  os << "# k=" << t.order << " seed=" << t.seed
     << " representation=" << representation_name(t.representation) << '\n';
  os << "step,height,shape\n";
  for (const TrajectoryPoint& p : t.points) {
    os << p.step << ',' << p.height << ',' << p.shape.to_string() << '\n';
  }
  return os.str();
}

Json estimate_to_json(const SimEstimate& e, bool include_elapsed) {
  Json out{{"k", e.k},
           {"steps_per_trial", e.steps_per_trial},
           {"trials", e.trials},
           {"point_estimate", e.point_estimate},
           {"std_error", e.std_error},
           {"seed", e.seed}};
  if (include_elapsed) out["elapsed"] = e.elapsed_seconds;
  return out;
}

template Json potential_to_json<Rational>(const ShapeGraph&, const Potential<Rational>&);
template Json potential_to_json<double>(const ShapeGraph&, const Potential<double>&);
template Json edge_field_to_json<Rational>(const EdgeField<Rational>&);
template Json edge_field_to_json<double>(const EdgeField<double>&);
template Json hodge_to_json<Rational>(const ShapeGraph&, const HodgeDecomposition<Rational>&);
template Json hodge_to_json<double>(const ShapeGraph&, const HodgeDecomposition<double>&);

}  // namespace shapewalk
