#pragma once

#include <cstdint>
#include <vector>

#include "shapewalk/scalar.hpp"

namespace shapewalk {

/// Largest K for which the system's entries fit in 64-bit integers comfortably.
inline constexpr int kMaxRemarkOrder = 30;

/// The K x K system obtained from zero flux of A - grad f across every digit
/// cut {a_i = 1} -> {a_i = -1}, for a stationary grad f with increments F_j.
struct RemarkSystem {
  int dimension = 0;
  /// matrix[i][i] = 3^(K-1); matrix[i][j] = -3^(|i-j|-1) otherwise.
  std::vector<std::vector<std::int64_t>> matrix;
  /// rhs[j] = 3^(K-j), j = 1..K.
  std::vector<std::int64_t> rhs;
};

RemarkSystem remark_system(int order);

/// Exact solution (F_1, ..., F_K).
std::vector<Rational> solve_remark_system(const RemarkSystem& system);

}  // namespace shapewalk
