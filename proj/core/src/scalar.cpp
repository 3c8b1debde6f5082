#include "shapewalk/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace shapewalk {

std::string_view mode_name(Mode mode) {
  return mode == Mode::exact ? ScalarTraits<Rational>::name : ScalarTraits<double>::name;
}

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw std::invalid_argument("mode must be 'exact' or 'float'");
}

std::string to_exact_string(const Rational& value) { return value.get_str(); }

std::string to_decimal_string(const Rational& value, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << value.get_d();
  return os.str();
}

Rational parse_rational(std::string_view text) {
  Rational out;
  if (out.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
  out.canonicalize();
  return out;
}

bool scalar_equal(double a, double b, double tolerance) { return std::abs(a - b) <= tolerance; }

bool is_zero(double a, double tolerance) { return std::abs(a) <= tolerance; }

}  // namespace shapewalk
