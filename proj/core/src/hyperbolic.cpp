// SPDX-License-Identifier: Apache-2.0
#include "bures/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bures/errors.hpp"

namespace bures {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAntipodalTolerance = 1e-15;
constexpr double kRangeTolerance = 1e-12;

// artanh r written as log1p(r) - log(1 - r^2)/2, with 1 - r^2 taken from the
// components directly. Avoids the 1/(1 - r) blow-up of evaluating artanh on
// a rounded norm near the boundary.
double rapidity_of(const BlochVector& n) {
  if (n.is_pure()) return kInf;
  return std::log1p(n.norm()) - 0.5 * std::log(n.mixedness());
}

void require_finite_rapidity(const BlochVector& n, const char* which) {
  if (n.norm() > kFiniteRapidityNorm) {
    throw OutOfRegime(std::string("|") + which + "| exceeds 1 - 1e-9; rapidity not finite enough");
  }
}

// sinh phi_w = gamma_u gamma_v sqrt(|u + v|^2 - |u x v|^2)
double sinh_composed(const BlochVector& u, const BlochVector& v, double gg) {
  const Vec3 sum = u.vec() + v.vec();
  const Vec3 wedge = cross(u.vec(), v.vec());
  return gg * std::sqrt(std::max(0.0, dot(sum, sum) - dot(wedge, wedge)));
}

// Disk radius tanh(phi/2) for a point at Euclidean Bloch norm r:
// tanh(phi/2) = r / (1 + sqrt(1 - r^2)).
double disk_radius(const BlochVector& n) {
  return n.norm() / (1.0 + std::sqrt(n.mixedness()));
}

DiskPoint mobius_to_origin(DiskPoint p, DiskPoint z) { return (z - p) / (1.0 - std::conj(p) * z); }
DiskPoint mobius_from_origin(DiskPoint p, DiskPoint z) {
  return (z + p) / (1.0 + std::conj(p) * z);
}

}  // namespace

RapidityRep rapidity_from_bloch(const BlochVector& n) {
  const double r = n.norm();
  if (r == 0.0) return {};
  return {(1.0 / r) * n.vec(), rapidity_of(n)};
}

BlochVector bloch_from_rapidity(const RapidityRep& r) {
  if (r.phi == 0.0) return {};
  if (std::isinf(r.phi)) return BlochVector(r.direction);
  return BlochVector(std::tanh(r.phi) * r.direction);
}

double gamma_factor(const BlochVector& n) {
  if (n.is_pure()) throw OutOfRegime("Lorentz factor of a pure state is infinite");
  return 1.0 / std::sqrt(n.mixedness());
}

ComplexMatrix2 lorentz_boost(const RapidityRep& r) {
  if (!std::isfinite(r.phi)) throw OutOfRegime("boost of infinite rapidity");
  return Complex(std::cosh(r.phi)) * ComplexMatrix2::identity() +
         Complex(std::sinh(r.phi)) * pauli_dot(r.direction);
}

BlochVector einstein_add(const BlochVector& u, const BlochVector& v) {
  const double gamma_u = gamma_factor(u);
  const double denom = one_plus_dot(u.vec(), v.vec());
  if (denom <= kAntipodalTolerance) {
    throw Degenerate("1 + u.v vanishes; Einstein sum undefined at the antipodal pure limit");
  }
  // 1 + gamma_u/(1 + gamma_u) u.v regrouped as (1 + gamma_u (1 + u.v))/(1 + gamma_u),
  // which does not cancel when u.v is close to -1.
  const double coef = (1.0 + gamma_u * denom) / (1.0 + gamma_u);
  const Vec3 numer = coef * u.vec() + (1.0 / gamma_u) * v.vec();
  return BlochVector((1.0 / denom) * numer);
}

double gamma_composition(const BlochVector& u, const BlochVector& v) {
  return gamma_factor(u) * gamma_factor(v) * one_plus_dot(u.vec(), v.vec());
}

double cosine_law_cosh(const BlochVector& u, const BlochVector& v) {
  const RapidityRep ru = rapidity_from_bloch(u);
  const RapidityRep rv = rapidity_from_bloch(v);
  // cosh and tanh of each side taken as gamma and |n|, not via phi.
  const double cosh_u = gamma_factor(u);
  const double cosh_v = gamma_factor(v);
  const double tanh_u = u.norm();
  const double tanh_v = v.norm();
  return cosh_u * cosh_v * (1.0 + dot(ru.direction, rv.direction) * tanh_u * tanh_v);
}

double fidelity_hyperbolic(const BlochVector& u, const BlochVector& v) {
  require_finite_rapidity(u, "u");
  require_finite_rapidity(v, "v");
  const double cosh_w = cosine_law_cosh(u, v);
  const double cosh_half_w = std::sqrt(0.5 * (1.0 + cosh_w));
  const double f = (cosh_half_w / gamma_factor(u)) * (cosh_half_w / gamma_factor(v));
  if (!std::isfinite(f) || f > 1.0 + kRangeTolerance) {
    throw NumericalFailure("hyperbolic fidelity left [0, 1]");
  }
  return std::min(f, 1.0);
}

double disk_distance(DiskPoint p, DiskPoint q) {
  const double gap = std::abs(p - q);
  const double scale = std::sqrt((1.0 - std::norm(p)) * (1.0 - std::norm(q)));
  return 2.0 * std::asinh(gap / scale);
}

DiskPoint geodesic_point(DiskPoint p, DiskPoint q, double t) {
  const DiskPoint image = mobius_to_origin(p, q);
  const double r = std::abs(image);
  if (r == 0.0) return p;
  const double half = 0.5 * disk_distance(p, q);
  return mobius_from_origin(p, (std::tanh(t * half) / r) * image);
}

std::vector<DiskPoint> geodesic_polyline(DiskPoint p, DiskPoint q, int samples) {
  if (samples < 2) throw std::invalid_argument("geodesic polyline needs at least two samples");
  std::vector<DiskPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  out.push_back(p);
  for (int i = 1; i + 1 < samples; ++i) {
    out.push_back(geodesic_point(p, q, static_cast<double>(i) / (samples - 1)));
  }
  out.push_back(q);
  return out;
}

double HyperbolicTriangle::law_of_cosines_residual() const {
  const double cu = std::cosh(phi_u);
  const double cv = std::cosh(phi_v);
  const double rhs = cu * cv - std::sinh(phi_u) * std::sinh(phi_v) * std::cos(angle_A);
  return std::abs(std::cosh(phi_w) - rhs) / (cu * cv);
}

HyperbolicTriangle triangle(const BlochVector& u, const BlochVector& v) {
  if (u.norm() <= kDirectionNorm || v.norm() <= kDirectionNorm) {
    throw Degenerate("triangle needs |u|, |v| > 1e-12; a zero vector has no direction");
  }
  require_finite_rapidity(u, "u");
  require_finite_rapidity(v, "v");

  const double gamma_u = gamma_factor(u);
  const double gamma_v = gamma_factor(v);
  const double gg = gamma_u * gamma_v;
  const double gamma_w = gg * one_plus_dot(u.vec(), v.vec());

  HyperbolicTriangle t;
  t.phi_u = rapidity_of(u);
  t.phi_v = rapidity_of(v);
  t.phi_w = std::asinh(sinh_composed(u, v, gg));
  const double between = std::atan2(norm(cross(u.vec(), v.vec())), dot(u.vec(), v.vec()));
  t.angle_A = std::numbers::pi - between;

  // cosh m = (cosh b + cosh c) / (2 cosh(a/2)), half angle from cosh phi_w.
  const double cosh_half_w = std::sqrt(0.5 * (1.0 + gamma_w));
  t.median_AD = std::acosh(std::max(1.0, (gamma_u + gamma_v) / (2.0 * cosh_half_w)));

  t.disk_A = 0.0;
  t.disk_B = disk_radius(u);
  t.disk_C = std::polar(disk_radius(v), t.angle_A);
  t.disk_D = geodesic_point(t.disk_B, t.disk_C, 0.5);
  return t;
}

}  // namespace bures
