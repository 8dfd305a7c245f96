#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace intramorph {

/// SplitMix64 finalizer. Used to decorrelate derived seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for iteration/trial `index` of a run seeded with `seed`:
/// mix64(seed) XOR index. Every derived stream is independent of the
/// order in which iterations are executed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the reductions to bounded integers and
/// unit doubles are done here rather than through <random> distributions,
/// which are implementation-defined. Single consumer.
class SeededSource {
public:
  static constexpr std::string_view algorithm_id = "mt19937_64+mod-reject+u53/v1";

  explicit SeededSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

} // namespace intramorph
