#pragma once

#include <cmath>
#include <cstdint>

namespace hdpart {

/// SplitMix64. A stream is keyed by (seed, stream index), so independent
/// blocks of work can be drawn in any order and on any thread.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix(z);
  }

  /// Uniform on (0, 1] with 53 random bits.
  double uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  /// Prob(k) = (1 - q) q^k, by inversion: floor(log u / log q).
  std::int64_t geometric(double log_q) {
    return static_cast<std::int64_t>(std::floor(std::log(uniform_open0()) / log_q));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hdpart
