// SPDX-License-Identifier: Apache-2.0
//
// Deterministic test-point generation. Every draw is a pure function of a
// 64-bit key, so sweeps can be split across workers in any order and still
// reproduce the same points.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bures/qubit.hpp"

namespace bures {

enum class Regime {
  uniform_ball,  // uniform in volume
  near_pure,     // 1 - |n| log-uniform in [1e-9, 1e-3]
  near_mixed,    // |n| uniform in [0, 1e-3]
  pure,          // uniform on the sphere, |n| = 1
};

std::string_view to_string(Regime r);
std::optional<Regime> parse_regime(std::string_view name);

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the i-th output is mix64(key + (i + 1) * golden).
/// Seeking is free and two generators with different keys are independent
/// streams for all practical purposes.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  constexpr std::uint64_t next() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_;
};

/// Key of substream `stream` under `seed`.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
  return CounterRng(seed, stream).next();
}

BlochVector random_bloch(std::uint64_t seed, Regime regime);

/// Uniform 3D rotation drawn from `seed`, returned as a row-major matrix.
struct Rotation3 {
  double m[3][3];
  Vec3 apply(const Vec3& v) const;
};
Rotation3 random_rotation(std::uint64_t seed);

}  // namespace bures
