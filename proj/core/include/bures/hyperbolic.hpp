// SPDX-License-Identifier: Apache-2.0
//
// Bloch vectors read as relativistic velocities (c = 1): rapidities, Lorentz
// boosts, Einstein addition, the hyperbolic law of cosines, the resulting
// fidelity formula
//
//   F = [cosh(phi_w/2) / cosh phi_u] [cosh(phi_w/2) / cosh phi_v],
//   w = u (+) v,
//
// and the triangle with sides phi_u, phi_v, phi_w laid out in the Poincare
// disk.
//
// One rapidity symbol is used throughout: phi = artanh |n|, so
// cosh phi = gamma = 1 / sqrt(1 - |n|^2).
#pragma once

#include <complex>
#include <vector>

#include "bures/qubit.hpp"

namespace bures {

/// Norm bound for routes that need a finite rapidity.
inline constexpr double kFiniteRapidityNorm = 1.0 - 1e-9;
/// Norm below which a direction is considered undefined.
inline constexpr double kDirectionNorm = 1e-12;

struct RapidityRep {
  Vec3 direction{0.0, 0.0, 1.0};  // unit; (0, 0, 1) when phi == 0
  double phi = 0.0;               // >= 0, +inf for pure states
};

RapidityRep rapidity_from_bloch(const BlochVector& n);
BlochVector bloch_from_rapidity(const RapidityRep& r);

/// Lorentz factor cosh phi. Throws OutOfRegime for pure states.
double gamma_factor(const BlochVector& n);

/// L = cosh(phi) 1 + sinh(phi) sigma . nhat; rho = L / (2 cosh phi).
/// Throws OutOfRegime for phi = +inf.
ComplexMatrix2 lorentz_boost(const RapidityRep& r);

/// u (+) v = [u + v/gamma_u + gamma_u/(1 + gamma_u) (u.v) u] / (1 + u.v).
/// Not commutative; only the norm is symmetric. Throws OutOfRegime when u is
/// pure and Degenerate when 1 + u.v <= 1e-15.
BlochVector einstein_add(const BlochVector& u, const BlochVector& v);

/// gamma_w = gamma_u gamma_v (1 + u.v). Both inputs must be mixed.
double gamma_composition(const BlochVector& u, const BlochVector& v);

/// The same quantity through the law of cosines
/// cosh phi_w = cosh phi_u cosh phi_v (1 + uhat.vhat tanh phi_u tanh phi_v).
double cosine_law_cosh(const BlochVector& u, const BlochVector& v);

/// Fidelity from the hyperbolic formula. Needs |u|, |v| <= 1 - 1e-9.
double fidelity_hyperbolic(const BlochVector& u, const BlochVector& v);

using DiskPoint = std::complex<double>;

/// Hyperbolic distance in the Poincare disk (curvature -1), in the
/// cancellation-free form 2 asinh(|p - q| / sqrt((1 - |p|^2)(1 - |q|^2))).
double disk_distance(DiskPoint p, DiskPoint q);

/// Point a fraction t in [0, 1] of the way along the geodesic p -> q.
DiskPoint geodesic_point(DiskPoint p, DiskPoint q, double t);

/// `samples` >= 2 points along the geodesic, endpoints exactly p and q.
std::vector<DiskPoint> geodesic_polyline(DiskPoint p, DiskPoint q, int samples);

/// Triangle with |AB| = phi_u, |AC| = phi_v, |BC| = phi_w and angle
/// pi - arccos(uhat.vhat) at A; D is the midpoint of BC.
///
/// Disk pose: A at the origin, B on the positive real axis, C in the upper
/// half plane at polar angle angle_A.
struct HyperbolicTriangle {
  double phi_u = 0.0;
  double phi_v = 0.0;
  double phi_w = 0.0;
  double angle_A = 0.0;
  double median_AD = 0.0;
  DiskPoint disk_A{};
  DiskPoint disk_B{};
  DiskPoint disk_C{};
  DiskPoint disk_D{};

  /// |cosh phi_w - (cosh phi_u cosh phi_v - sinh phi_u sinh phi_v cos A)|
  /// divided by cosh phi_u cosh phi_v, the scale of the terms involved.
  double law_of_cosines_residual() const;
};

/// Throws Degenerate when |u| or |v| <= 1e-12 and OutOfRegime above
/// 1 - 1e-9.
HyperbolicTriangle triangle(const BlochVector& u, const BlochVector& v);

}  // namespace bures
