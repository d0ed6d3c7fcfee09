// SPDX-License-Identifier: Apache-2.0
//
// Seedable random number generation with a fully pinned algorithm, so that
// simulation reports are reproducible from a seed alone.
//
// Uniform stream: SplitMix64 (Steele, Lea & Flood's 64-bit mixer over a Weyl
// sequence with increment 0x9E3779B97F4A7C15). Unit doubles take the top 53
// bits shifted into (0, 1].
//
// Gaussian variates: the trigonometric Box-Muller transform, consuming
// exactly two uniforms per pair of normals. The cosine variate is returned
// first and the sine variate on the following call.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace traincap {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in the half-open interval (0, 1].
  double next_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : uniforms_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniforms_.next_unit()));
    const double angle = 2.0 * std::numbers::pi * uniforms_.next_unit();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  SplitMix64 uniforms_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace traincap
