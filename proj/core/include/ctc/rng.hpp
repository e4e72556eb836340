#pragma once

#include <cstdint>

namespace ctc {

/// splitmix64: tiny deterministic generator. Used for every seeded draw in
/// the library so that identical seeds reproduce identical schedules, delay
/// patterns and sweeps on any platform or standard-library version.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound); bound must be >= 1.
  uint64_t uniform(uint64_t bound) {
    // Multiply-shift rejection-free reduction; bias is negligible at desk
    // scale and the result is platform-independent.
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool coin() { return next() & 1; }

  /// Derives an independent stream: deterministic function of (seed, tag).
  static uint64_t derive(uint64_t seed, uint64_t tag) {
    SplitMix64 r(seed ^ (0x517cc1b727220a95ULL * (tag + 1)));
    return r.next();
  }

 private:
  uint64_t state_;
};

}  // namespace ctc
