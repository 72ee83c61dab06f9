#pragma once

#include <cstdint>

namespace fgx {

/// Deterministic split-mix generator; all instance generation derives
/// from it so identical (spec, seed) inputs give identical bytes.
/// State update: s += 0x9E3779B97F4A7C15. Output: z = s;
/// z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
/// z *= 0x94D049BB133111EB; z ^= z >> 31.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  /// Uniform in [0, m); m > 0. Plain modulo, fixed by documentation.
  std::uint64_t below(std::uint64_t m) { return next() % m; }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

}  // namespace fgx
