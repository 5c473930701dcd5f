#pragma once

#include <cstdint>

namespace liederiv {

/// Deterministic 64-bit generator (splitmix64). Used everywhere randomness
/// is needed so equal seeds give byte-identical results across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; bias is irrelevant for sampling use.
  int uniform(int lo, int hi) {
    return lo + int(next() % std::uint64_t(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace liederiv
