#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "shapewalk/hodge.hpp"
#include "shapewalk/sim.hpp"

namespace shapewalk {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "0.1.0";

/// [+-1, ...] entries of a shape.
Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);

/// {"k", "vertices", "edges": [{"tail","head","a","loop"}], "d_k", "delta_k"},
/// vertices and edges in adjacency order.
Json graph_to_json(const ShapeGraph& g);

/// Exact values as "p/q" strings, float values as numbers.
Json scalar_to_json(const Rational& v);
Json scalar_to_json(double v);

/// Object keyed by the vertex array rendered as text (e.g. "[1,-1]"), in lexicographic vertex order.
template <class T>
Json potential_to_json(const ShapeGraph& g, const Potential<T>& f);

/// Canonical-edge values: [{"tail","head","loop","value"}, ...].
template <class T>
Json edge_field_to_json(const EdgeField<T>& field);

/// Document for a Hodge decomposition of A: potential, divergence-free part,
/// residual norms and <A, grad f>.
template <class T>
Json hodge_to_json(const ShapeGraph& g, const HodgeDecomposition<T>& hodge);

/// CSV table with columns vertex,f,f1,f2,div_a (exact values).
std::string potential_table_csv(const ShapeGraph& g, const Potential<Rational>& f);

/// `step,height,shape` rows preceded by one `#` comment line carrying k, seed and representation.
std::string trajectory_to_csv(const Trajectory& t);

Json estimate_to_json(const SimEstimate& e, bool include_elapsed);

}  // namespace shapewalk
