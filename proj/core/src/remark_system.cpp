#include "shapewalk/remark_system.hpp"

#include <cstdlib>
#include <string>

#include "shapewalk/errors.hpp"
#include "shapewalk/linear_solve.hpp"

namespace shapewalk {
namespace {

std::int64_t pow3(int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= 3;
  return out;
}

}  // namespace

RemarkSystem remark_system(int order) {
  if (order < 1 || order > kMaxRemarkOrder) {
    throw CapacityError("remark system order must be in [1, " + std::to_string(kMaxRemarkOrder) +
                        "]");
  }
  RemarkSystem s;
  s.dimension = order;
  s.matrix.assign(static_cast<std::size_t>(order), std::vector<std::int64_t>(static_cast<std::size_t>(order)));
  s.rhs.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      s.matrix[i][j] = i == j ? pow3(order - 1) : -pow3(order - 1 - std::abs(i - j));
    }
    s.rhs[i] = pow3(order - 1 - i);
  }
  return s;
}

std::vector<Rational> solve_remark_system(const RemarkSystem& system) {
  const auto n = static_cast<std::size_t>(system.dimension);
  if (system.matrix.size() != n || system.rhs.size() != n) {
    throw DimensionError("remark system dimensions are inconsistent");
  }
  IntegerMatrix m(n);
  std::vector<mpz_class> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (system.matrix[i].size() != n) throw DimensionError("remark system matrix must be square");
    for (std::int64_t v : system.matrix[i]) m[i].emplace_back(static_cast<long>(v));
    b[i] = static_cast<long>(system.rhs[i]);
  }
  return solve_exact(std::move(m), std::move(b));
}

}  // namespace shapewalk
