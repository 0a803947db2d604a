// SPDX-License-Identifier: Apache-2.0
#include "bures/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bures/errors.hpp"

namespace bures {

namespace {

constexpr double kRangeTolerance = 1e-12;
constexpr double kPsdTolerance = 1e-10;

double clamp_unit(double f, const char* what) {
  if (!std::isfinite(f) || f < -kRangeTolerance || f > 1.0 + kRangeTolerance) {
    throw NumericalFailure(std::string(what) + " left [0, 1]");
  }
  return std::clamp(f, 0.0, 1.0);
}

void require_mixed(const BlochVector& u, const BlochVector& v) {
  if (u.is_pure() || v.is_pure()) {
    throw OutOfRegime("Lambda roots need mixed states; use bures_fidelity_closed");
  }
}

}  // namespace

double trace_distance_matrix(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const EigenPair ev = hermitian_eigenvalues(rho1.matrix() - rho2.matrix());
  return 0.5 * (std::abs(ev.minus) + std::abs(ev.plus));
}

double trace_distance_bloch(const BlochVector& u, const BlochVector& v) {
  return 0.5 * norm(u.vec() - v.vec());
}

double bures_fidelity_matrix(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const ComplexMatrix2 root = sqrt_density(rho1);
  ComplexMatrix2 m = root * rho2.matrix() * root;
  m = Complex(0.5) * (m + m.adjoint());

  const EigenPair ev = hermitian_eigenvalues(m);
  if (ev.minus < -kPsdTolerance) {
    throw NumericalFailure("sqrt(rho1) rho2 sqrt(rho1) is not positive semidefinite");
  }
  // det M = det rho1 det rho2; taking it from the factors keeps lambda- at
  // full relative accuracy when both states are close to pure.
  const double det_m = density_determinant(rho1) * density_determinant(rho2);

  const double lambda_plus = std::max(0.0, ev.plus);
  const double lambda_minus =
      lambda_plus > 0.0 ? std::min(lambda_plus, det_m / lambda_plus) : 0.0;
  const double trace_root = std::sqrt(lambda_plus) + std::sqrt(lambda_minus);
  return clamp_unit(trace_root * trace_root, "matrix-route fidelity");
}

LambdaQuadratic lambda_quadratic(const BlochVector& u, const BlochVector& v) {
  require_mixed(u, v);
  const double gamma_u = 1.0 / std::sqrt(u.mixedness());
  const double gamma_v = 1.0 / std::sqrt(v.mixedness());
  const double gamma_w = gamma_u * gamma_v * (1.0 + dot(u.vec(), v.vec()));
  const double gg = gamma_u * gamma_v;
  return {gamma_w / (2.0 * gg), 1.0 / (16.0 * gg * gg)};
}

LambdaRoots lambda_roots(const BlochVector& u, const BlochVector& v) {
  require_mixed(u, v);
  const double gamma_u = 1.0 / std::sqrt(u.mixedness());
  const double gamma_v = 1.0 / std::sqrt(v.mixedness());
  const double gg = gamma_u * gamma_v;
  const double gamma_w = gg * (1.0 + dot(u.vec(), v.vec()));
  // sinh^2 phi_w = gamma_w^2 - 1 = gamma_u^2 gamma_v^2 (|u + v|^2 - |u x v|^2),
  // free of the cancellation in gamma_w^2 - 1 when phi_w is small.
  const Vec3 sum = u.vec() + v.vec();
  const Vec3 wedge = cross(u.vec(), v.vec());
  const double sinh_w = gg * std::sqrt(std::max(0.0, dot(sum, sum) - dot(wedge, wedge)));
  const double exp_w = gamma_w + sinh_w;
  const double denom = 4.0 * gg;
  return {exp_w / denom, 1.0 / (exp_w * denom)};
}

double bures_fidelity_closed(const BlochVector& u, const BlochVector& v) {
  const double overlap = 0.5 * (1.0 + dot(u.vec(), v.vec()));
  const double mixed = 0.5 * std::sqrt(u.mixedness() * v.mixedness());
  return clamp_unit(overlap + mixed, "closed-form fidelity");
}

}  // namespace bures
