#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shapewalk {

/// Largest order a Shape can encode (one bit per digit).
inline constexpr int kMaxShapeOrder = 31;

/// A vertex of V_K = {-1,1}^K: the relative configuration of K+1 walkers.
///
/// Digits are stored as a bit mask (bit i set when digit i is +1, digits
/// counted from zero). The mask is an internal detail; every external
/// representation goes through entries() or to_string().
class Shape {
 public:
  /// Builds a shape from an explicit +-1 sequence.
  static Shape from_entries(std::span<const int> entries);
  /// Parses a string of '+' and '-' characters.
  static Shape parse(std::string_view text);
  static Shape from_mask(int order, std::uint32_t mask);
  static Shape all_ones(int order);
  static Shape all_minus_ones(int order);

  int order() const noexcept { return order_; }
  std::uint32_t mask() const noexcept { return mask_; }

  /// Digit at zero-based position `index`, either -1 or +1.
  int operator[](int index) const;
  std::vector<int> entries() const;
  std::string to_string() const;

  /// Number of digits equal to +1.
  int count_plus() const noexcept;
  /// Number of positions where the two shapes differ.
  int hamming(const Shape& other) const;

  /// The shape (digit, a_1, ..., a_K) of order K+1.
  Shape prepend(int digit) const;
  /// The shape with digit i replaced by -digit.
  Shape flipped(int index) const;
  /// The shape with every digit negated.
  Shape negated() const noexcept;

  friend bool operator==(const Shape&, const Shape&) = default;
  /// Lexicographic on the +-1 entries with -1 < +1.
  friend std::strong_ordering operator<=>(const Shape& a, const Shape& b);

 private:
  Shape(int order, std::uint32_t mask) : order_(order), mask_(mask) {}

  int order_ = 0;
  std::uint32_t mask_ = 0;
};

/// Lexicographic comparison of two masks of the same order (-1 < +1, digit 0 first).
bool lex_less(std::uint32_t a, std::uint32_t b) noexcept;

}  // namespace shapewalk
