#include "shapewalk/rng.hpp"

#include <stdexcept>

namespace shapewalk {
namespace {

__extension__ using uint128 = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t index) {
  return RandomStream(splitmix64(splitmix64(master_seed) ^ splitmix64(~index)));
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RandomStream::below: empty range");
  // Lemire's multiply-and-reject.
  uint128 product = static_cast<uint128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<uint128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace shapewalk
