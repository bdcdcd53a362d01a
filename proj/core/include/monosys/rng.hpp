#pragma once

#include <cmath>
#include <cstdint>

#include "monosys/vector.hpp"

namespace monosys {

/// Default seed for every sampling routine in the library. Fixed so that CI
/// runs are reproducible; override per call or via the CLI --seed flag.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// SplitMix64. Used instead of <random> engines because the standard leaves
/// distribution output implementation-defined and we need byte-identical
/// results across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi].
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  /// Uniformly distributed unit direction in R^n.
  Vector unit_direction(std::size_t n) {
    Vector d(n);
    double s = 0.0;
    while (s == 0.0) {
      for (std::size_t i = 0; i < n; ++i) d[i] = gaussian();
      s = norm(d);
    }
    for (double& v : d) v /= s;
    return d;
  }

 private:
  std::uint64_t state_;
};

/// Decorrelates sub-streams derived from one user-facing seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
  return mix.next();
}

}  // namespace monosys
