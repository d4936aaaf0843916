#pragma once

#include <cstdint>

namespace domkit {

/// SplitMix64 generator (Steele, Lea, Flood). Chosen because the entire
/// algorithm fits in a dozen lines, so identical seeds give identical graphs
/// on every platform; this is part of the reproducibility contract and must
/// not be swapped for std::mt19937 or any distribution wrapper.
struct SplitMix64 {
  uint64_t state;

  explicit constexpr SplitMix64(uint64_t seed) : state(seed) {}

  constexpr uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, 1) built from the top 53 bits, so the comparison
  /// `uniform01() < p` is bit-exact across platforms.
  constexpr double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound >= 1.
  constexpr uint64_t below(uint64_t bound) { return next() % bound; }
};

}  // namespace domkit
