#pragma once

#include <vector>

#include "shapewalk/fields.hpp"
#include "shapewalk/scalar.hpp"

namespace shapewalk {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Solves matrix * x = rhs exactly by fraction-free (Bareiss) elimination
/// with row pivoting. Throws NumericError if the matrix is singular.
std::vector<Rational> solve_exact(IntegerMatrix matrix, std::vector<mpz_class> rhs);

/// Rational entries are cleared of denominators row by row, then solved exactly.
std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& matrix,
                                  const std::vector<Rational>& rhs);

/// Solves div(grad f) = rhs on the graph with f(gauge_vertex) = 0, exactly.
/// `rhs` must sum to zero.
Potential<Rational> solve_laplacian_exact(const ShapeGraph& g, const Potential<Rational>& rhs,
                                          std::uint32_t gauge_vertex);

struct CgReport {
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Conjugate gradients for div(grad f) = rhs on the mean-zero subspace, then
/// shifted so f(gauge_vertex) = 0. Throws NumericError (carrying the reached
/// residual) when `relative_tolerance` is not met within `max_iterations`.
Potential<double> solve_laplacian_cg(const ShapeGraph& g, const Potential<double>& rhs,
                                     std::uint32_t gauge_vertex, double relative_tolerance,
                                     int max_iterations, CgReport* report = nullptr);

}  // namespace shapewalk
