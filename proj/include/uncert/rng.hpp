#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "uncert/linalg.hpp"

namespace uncert {

/// Deterministic 64-bit generator: SplitMix64 (Steele/Lea/Flood constants,
/// the same finalizer used by java.util.SplittableRandom). Chosen because it
/// is splittable, has published constants, and produces identical sequences
/// on every platform with 64-bit integers.
///
/// Stream layout is part of the output contract:
///  - next_u64: state += 0x9E3779B97F4A7C15, then the xor/multiply finalizer.
///  - next_uniform: top 53 bits of next_u64, scaled to [0, 1).
///  - next_gaussian_pair: Box–Muller on (u1, u2) drawn in that order,
///      r = sqrt(−2·ln(1−u1)), returns (r·cos(2πu2), r·sin(2πu2)).
///  - next_complex_gaussian: one pair, real part first.
///  - sub_rng(k): child seed derived from the constructor seed and k only,
///      so splitting a campaign into N streams yields the same draws for
///      stream k regardless of N (serial == parallel).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::pair<double, double> next_gaussian_pair() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  Complex next_complex_gaussian() {
    const auto [re, im] = next_gaussian_pair();
    return Complex{re, im};
  }

  SeededRng sub_rng(std::uint64_t stream_index) const {
    // Scramble the parent seed once so child streams do not replay the
    // parent's own output sequence, then index by stream.
    const std::uint64_t base = mix(seed_ ^ 0x6A09E667F3BCC909ULL);
    return SeededRng(mix(base + 0x9E3779B97F4A7C15ULL * (stream_index + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace uncert
