#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shapewalk {

using Rational = mpq_class;

enum class Mode { exact, floating };

/// Absolute tolerance used by float-mode equality checks.
inline constexpr double kDefaultTolerance = 1e-10;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Mode mode = Mode::exact;
  static constexpr std::string_view name = "exact";
};

template <>
struct ScalarTraits<double> {
  static constexpr Mode mode = Mode::floating;
  static constexpr std::string_view name = "float";
};

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view text);

/// "p/q" in lowest terms ("p" when q = 1).
std::string to_exact_string(const Rational& value);
/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& value, int significant_digits = 12);
Rational parse_rational(std::string_view text);

// Reduced num/den; mpq_class(num, den) leaves the fraction unreduced.
inline Rational fraction(long num, unsigned long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

inline bool scalar_equal(const Rational& a, const Rational& b) { return a == b; }
bool scalar_equal(double a, double b, double tolerance = kDefaultTolerance);

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
bool is_zero(double a, double tolerance = kDefaultTolerance);

}  // namespace shapewalk
