#pragma once

#include <cstdint>

namespace bergman {

// splitmix64: tiny deterministic generator with identical output on every
// platform, which std::mt19937 + distributions do not guarantee. Each
// randomized verifier owns one stream per (seed, trial index).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant for test data.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
  g.next();
  return g.next();
}

}  // namespace bergman
