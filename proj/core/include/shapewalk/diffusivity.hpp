#pragma once

#include "shapewalk/hodge.hpp"

namespace shapewalk {

/// Exact limit variance of the first walker and the quantities it is built from.
struct DiffusivityReport {
  int order = 0;
  Rational a_norm2;     // <A, A>, always 1
  Rational a_dot_grad;  // <A, grad f> with f the Hodge potential of A
  Rational sigma2;      // <A, A> - <A, grad f>
  Rational b_norm2;     // <B, B> with B = A - grad f
};

/// Computes sigma_K^2 from the materialized graph and an exact Hodge solve of A.
DiffusivityReport sigma_squared_exact(const ShapeGraph& g, const HodgeOptions& options = {});
DiffusivityReport sigma_squared_exact(int order, const HodgeOptions& options = {});

/// 2 / (K + 2), no graph needed.
Rational sigma_squared_closed_form(int order);

/// (2/D_K) times the sum of a field over E_K^+.
Rational positive_edge_average(const EdgeField<Rational>& field);

/// (4/D_K) |E_{K-1}^+| F_1 - 2 delta_K / D_K, with |E_{K-1}^+| counted on G_{K-1}
/// (a single loop when K = 1).
Rational facet_decomposition_value(const ShapeGraph& g);

}  // namespace shapewalk
