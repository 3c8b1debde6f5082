#include "shapewalk/shape.hpp"

#include <bit>

#include "shapewalk/errors.hpp"

namespace shapewalk {
namespace {

void check_shape_order(int order) {
  if (order < 1 || order > kMaxShapeOrder) {
    throw DimensionError("shape order must be in [1, " + std::to_string(kMaxShapeOrder) +
                         "], got " + std::to_string(order));
  }
}

std::uint32_t order_mask(int order) {
  return order == 32 ? ~0u : ((1u << order) - 1u);
}

}  // namespace

bool lex_less(std::uint32_t a, std::uint32_t b) noexcept {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  return ((a >> first) & 1u) == 0;
}

Shape Shape::from_entries(std::span<const int> entries) {
  check_shape_order(static_cast<int>(entries.size()));
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 1) {
      mask |= 1u << i;
    } else if (entries[i] != -1) {
      throw DimensionError("shape entries must be -1 or +1, got " + std::to_string(entries[i]));
    }
  }
  return Shape(static_cast<int>(entries.size()), mask);
}

Shape Shape::parse(std::string_view text) {
  std::vector<int> entries;
  entries.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      entries.push_back(1);
    } else if (c == '-') {
      entries.push_back(-1);
    } else {
      throw DimensionError("shape strings use only '+' and '-'");
    }
  }
  return from_entries(entries);
}

Shape Shape::from_mask(int order, std::uint32_t mask) {
  check_shape_order(order);
  if ((mask & ~order_mask(order)) != 0) {
    throw DimensionError("mask has bits beyond the shape order");
  }
  return Shape(order, mask);
}

Shape Shape::all_ones(int order) {
  check_shape_order(order);
  return Shape(order, order_mask(order));
}

Shape Shape::all_minus_ones(int order) {
  check_shape_order(order);
  return Shape(order, 0);
}

int Shape::operator[](int index) const {
  if (index < 0 || index >= order_) throw DimensionError("shape index out of range");
  return ((mask_ >> index) & 1u) ? 1 : -1;
}

std::vector<int> Shape::entries() const {
  std::vector<int> out(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out[i] = ((mask_ >> i) & 1u) ? 1 : -1;
  return out;
}

std::string Shape::to_string() const {
  std::string out(static_cast<std::size_t>(order_), '-');
  for (int i = 0; i < order_; ++i) {
    if ((mask_ >> i) & 1u) out[i] = '+';
  }
  return out;
}

int Shape::count_plus() const noexcept { return std::popcount(mask_); }

int Shape::hamming(const Shape& other) const {
  if (other.order_ != order_) throw DimensionError("shapes of different order");
  return std::popcount(mask_ ^ other.mask_);
}

Shape Shape::prepend(int digit) const {
  if (digit != 1 && digit != -1) throw DimensionError("digit must be -1 or +1");
  check_shape_order(order_ + 1);
  return Shape(order_ + 1, (mask_ << 1) | (digit == 1 ? 1u : 0u));
}

Shape Shape::flipped(int index) const {
  if (index < 0 || index >= order_) throw DimensionError("shape index out of range");
  return Shape(order_, mask_ ^ (1u << index));
}

Shape Shape::negated() const noexcept { return Shape(order_, ~mask_ & order_mask(order_)); }

std::strong_ordering operator<=>(const Shape& a, const Shape& b) {
  if (a.order_ != b.order_) return a.order_ <=> b.order_;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  return lex_less(a.mask_, b.mask_) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace shapewalk
