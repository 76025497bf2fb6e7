#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace bfmle {

// SplitMix64 (Steele, Lea & Flood 2014; constants from Vigna's reference
// implementation). Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

 private:
  std::uint64_t state_;
};

// Starting state of the stream for one replicate: a chained SplitMix64
// finalizer over (seed, grid_index, replicate_index). Depends only on the
// three indices, so any partition of replicates over threads draws the same
// numbers.
inline constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t grid_index,
                                          std::uint64_t replicate_index) {
  std::uint64_t h = SplitMix64::mix(seed + SplitMix64::kGamma);
  h = SplitMix64::mix(h ^ (grid_index + 2 * SplitMix64::kGamma));
  h = SplitMix64::mix(h ^ (replicate_index + 3 * SplitMix64::kGamma));
  return h;
}

// Standard normal variates by the Box-Muller transform. Uniforms are
// (k + 0.5) / 2^53 for the top 53 bits k of a draw, so they lie strictly in
// (0, 1). Each pair (u1, u2) yields sqrt(-2 ln u1) * cos(2 pi u2) first and
// the matching sin variate second.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t key) : gen_(key) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  double uniform() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  SplitMix64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bfmle
