#include "intramorph/source.hpp"

#include <stdexcept>

namespace intramorph {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed) ^ index;
}

std::uint64_t SeededSource::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  // Reject the low (2^64 mod bound) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

std::int64_t SeededSource::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform_int: empty range");
  }
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) {
    return static_cast<std::int64_t>(engine_());
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_below(span + 1));
}

} // namespace intramorph
