#pragma once

#include "shapewalk/fields.hpp"

namespace shapewalk {

/// Largest order decomposed exactly by default.
inline constexpr int kDefaultExactOrder = 8;

struct HodgeOptions {
  int max_exact_order = kDefaultExactOrder;
  /// Relative residual target of the float-mode conjugate-gradient solve.
  double relative_tolerance = 1e-12;
  /// Zero selects 10 * |V_K| + 100.
  int max_iterations = 0;
};

/// S = grad f + B with div B = 0, gauge f(all-ones) = 0.
template <class T>
struct HodgeDecomposition {
  Potential<T> potential;
  EdgeField<T> gradient;
  EdgeField<T> divergence_free;
  /// Largest |div B| over the vertices (exactly zero in exact mode).
  double divergence_residual = 0.0;
  /// Conjugate-gradient iterations (zero in exact mode).
  int iterations = 0;
};

HodgeDecomposition<Rational> hodge_decompose(const ShapeGraph& g, const EdgeField<Rational>& field,
                                             const HodgeOptions& options = {});
HodgeDecomposition<double> hodge_decompose(const ShapeGraph& g, const EdgeField<double>& field,
                                           const HodgeOptions& options = {});

}  // namespace shapewalk
