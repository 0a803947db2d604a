// SPDX-License-Identifier: Apache-2.0
#include "bures/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bures {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::uniform_ball: return "uniform_ball";
    case Regime::near_pure: return "near_pure";
    case Regime::near_mixed: return "near_mixed";
    case Regime::pure: return "pure";
  }
  return "unknown";
}

std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : {Regime::uniform_ball, Regime::near_pure, Regime::near_mixed, Regime::pure}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

Vec3 unit_direction(CounterRng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double azimuth = 2.0 * std::numbers::pi * rng.uniform();
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const Vec3 d{rho * std::cos(azimuth), rho * std::sin(azimuth), z};
  return (1.0 / norm(d)) * d;
}

}  // namespace

BlochVector random_bloch(std::uint64_t seed, Regime regime) {
  CounterRng rng(seed);
  const Vec3 dir = unit_direction(rng);
  const double u = rng.uniform();
  double radius = 1.0;
  switch (regime) {
    case Regime::uniform_ball:
      radius = std::cbrt(u);
      break;
    case Regime::near_pure: {
      const double lo = std::log(1e-9);
      const double hi = std::log(1e-3);
      radius = 1.0 - std::exp(lo + u * (hi - lo));
      break;
    }
    case Regime::near_mixed:
      radius = 1e-3 * u;
      break;
    case Regime::pure:
      return BlochVector(dir);
  }
  return BlochVector(radius * dir);
}

Vec3 Rotation3::apply(const Vec3& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Rotation3 random_rotation(std::uint64_t seed) {
  // Shoemake's uniform unit quaternion.
  CounterRng rng(seed);
  const double u1 = rng.uniform();
  const double u2 = 2.0 * std::numbers::pi * rng.uniform();
  const double u3 = 2.0 * std::numbers::pi * rng.uniform();
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  const double w = a * std::sin(u2);
  const double x = a * std::cos(u2);
  const double y = b * std::sin(u3);
  const double z = b * std::cos(u3);
  Rotation3 r{};
  r.m[0][0] = 1 - 2 * (y * y + z * z);
  r.m[0][1] = 2 * (x * y - z * w);
  r.m[0][2] = 2 * (x * z + y * w);
  r.m[1][0] = 2 * (x * y + z * w);
  r.m[1][1] = 1 - 2 * (x * x + z * z);
  r.m[1][2] = 2 * (y * z - x * w);
  r.m[2][0] = 2 * (x * z - y * w);
  r.m[2][1] = 2 * (y * z + x * w);
  r.m[2][2] = 1 - 2 * (x * x + y * y);
  return r;
}

}  // namespace bures
