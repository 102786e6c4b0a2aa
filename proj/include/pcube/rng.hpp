#pragma once

#include <cstdint>

namespace pcube {

// splitmix64 (Steele/Lea/Flood): tiny, platform-independent generator so
// seeded runs reproduce everywhere.  Constants are the published ones.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Draw below n; modulo bias is immaterial at the sampling scales used.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  bool coin() { return next() & 1; }
};

}  // namespace pcube
