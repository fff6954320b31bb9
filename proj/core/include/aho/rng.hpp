#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace aho {

/// splitmix64 (Steele, Lea & Flood 2014; fixed-increment variant by
/// Vigna).  Used for every stochastic path in the project because
/// substreams are trivial to derive: trajectory k draws from its own
/// generator seeded with mix(seed + k), so ensembles are bit-for-bit
/// reproducible regardless of thread count or execution order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0, 1): top 53 bits, half-ulp
  /// offset keeps 0 and 1 unreachable so log(u) stays finite.
  double next_double() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Generator for one decorrelated substream of a master seed.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(SplitMix64(seed + index).next());
  }

 private:
  std::uint64_t state_;
};

/// One Box-Muller pair of standard normal variates.
inline std::pair<double, double> normal_pair(SplitMix64& rng) {
  const double u1 = rng.next_double();
  const double u2 = rng.next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace aho
