#pragma once

#include <cstdint>

namespace scismm {

// splitmix64; the documented generator behind every randomized harness run.
// Streams are cheap to fork per trial so that parallel reductions stay
// bit-identical regardless of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) via the multiply-shift reduction.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool next_bit() { return (next() >> 63) != 0; }

  // Decorrelated stream for trial `index`; identical (seed, index) pairs give
  // identical streams.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ scramble(index + 0x9e3779b97f4a7c15ULL));
  }

 private:
  static std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace scismm
