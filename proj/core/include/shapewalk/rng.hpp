#pragma once

#include <cstdint>
#include <random>

namespace shapewalk {

/// Seedable 64-bit stream. Trial streams are derived from (master seed, index)
/// so trials can run in any order or in parallel with identical results.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Stream number `index` of the family identified by `master_seed`.
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t index);

  /// Uniform integer in [0, bound). Platform-independent (no std distributions).
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace shapewalk
