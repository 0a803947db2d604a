// SPDX-License-Identifier: Apache-2.0
#include "bures/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "bures/errors.hpp"

namespace bures {

ComplexMatrix2& ComplexMatrix2::operator+=(const ComplexMatrix2& o) {
  a11 += o.a11;
  a12 += o.a12;
  a21 += o.a21;
  a22 += o.a22;
  return *this;
}

ComplexMatrix2& ComplexMatrix2::operator-=(const ComplexMatrix2& o) {
  a11 -= o.a11;
  a12 -= o.a12;
  a21 -= o.a21;
  a22 -= o.a22;
  return *this;
}

ComplexMatrix2& ComplexMatrix2::operator*=(Complex s) {
  a11 *= s;
  a12 *= s;
  a21 *= s;
  a22 *= s;
  return *this;
}

ComplexMatrix2 operator+(ComplexMatrix2 a, const ComplexMatrix2& b) {
  return a += b;
}

ComplexMatrix2 operator-(ComplexMatrix2 a, const ComplexMatrix2& b) {
  return a -= b;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

ComplexMatrix2 operator*(Complex s, ComplexMatrix2 a) { return a *= s; }

ComplexMatrix2 pauli_dot(const Vec3& n) {
  return {n.z, Complex(n.x, -n.y), Complex(n.x, n.y), -n.z};
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12),
                   std::abs(a.a21 - b.a21), std::abs(a.a22 - b.a22)});
}

double hermiticity_defect(const ComplexMatrix2& m) {
  return max_abs_diff(m, m.adjoint());
}

bool is_finite(const ComplexMatrix2& m) {
  for (const Complex& c : {m.a11, m.a12, m.a21, m.a22}) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

namespace {

std::string describe(const Vec3& n) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << n.x << ", " << n.y << ", " << n.z << ")";
  return os.str();
}

// s + t as an unevaluated pair (sum, rounding error).
std::pair<double, double> two_sum(double s, double t) {
  const double sum = s + t;
  const double bp = sum - s;
  return {sum, (s - (sum - bp)) + (t - bp)};
}

// sum of a_i b_i with every product split exactly by fma and the partial
// sums compensated; accurate to a few ulps of the result.
double sum_of_products(std::initializer_list<std::pair<double, double>> terms) {
  double acc = 0.0;
  double err = 0.0;
  for (const auto& [a, b] : terms) {
    const double p = a * b;
    err += std::fma(a, b, -p);
    const auto [sum, e] = two_sum(acc, p);
    acc = sum;
    err += e;
  }
  return acc + err;
}

// a11 a22 - |a12|^2 for a Hermitian matrix, without the cancellation of the
// naive product difference.
double hermitian_determinant(const ComplexMatrix2& m) {
  const double re = m.a12.real();
  const double im = m.a12.imag();
  return sum_of_products({{m.a11.real(), m.a22.real()}, {-re, re}, {-im, im}});
}

EigenPair eigenvalues_unchecked(const ComplexMatrix2& m) {
  const double mean = 0.5 * (m.a11.real() + m.a22.real());
  const double half_gap = std::hypot(0.5 * (m.a11.real() - m.a22.real()), std::abs(m.a12));
  return {mean - half_gap, mean + half_gap};
}

Vec3 bloch_components(const ComplexMatrix2& m) {
  // tr(rho sigma_x) = a12 + a21, tr(rho sigma_y) = i (a12 - a21),
  // tr(rho sigma_z) = a11 - a22.
  return {(m.a12 + m.a21).real(), (Complex(0.0, 1.0) * (m.a12 - m.a21)).real(),
          (m.a11 - m.a22).real()};
}

// alpha * I + beta * (rho - mean * I) with alpha = (s+ + s-)/2 and
// beta = 1/(s+ + s-), s = sqrt of the eigenvalues. This is the spectral
// square root written without explicit projectors, so it stays finite when
// the spectrum is degenerate.
ComplexMatrix2 spectral_sqrt(const ComplexMatrix2& m, const EigenPair& ev) {
  const double s_plus = std::sqrt(ev.plus);
  const double s_minus = std::sqrt(ev.minus);
  const double sum = s_plus + s_minus;
  const double mean = 0.5 * (m.a11.real() + m.a22.real());
  const double alpha = 0.5 * sum;
  const double beta = 1.0 / sum;
  ComplexMatrix2 shifted = m - Complex(mean) * ComplexMatrix2::identity();
  return Complex(alpha) * ComplexMatrix2::identity() + Complex(beta) * shifted;
}

}  // namespace

BlochVector::BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {}

BlochVector::BlochVector(const Vec3& n) : n_(n) {
  if (!bures::is_finite(n)) {
    throw InvalidState("Bloch vector has non-finite components " + describe(n));
  }
  if (bures::norm(n) > 1.0 + kBallTolerance) {
    throw InvalidState("Bloch vector " + describe(n) + " lies outside the unit ball");
  }
}

double one_minus_norm_squared(const Vec3& n) {
  return sum_of_products({{1.0, 1.0}, {-n.x, n.x}, {-n.y, n.y}, {-n.z, n.z}});
}

double one_plus_dot(const Vec3& u, const Vec3& v) {
  return sum_of_products({{1.0, 1.0}, {u.x, v.x}, {u.y, v.y}, {u.z, v.z}});
}

double BlochVector::mixedness() const {
  const double m = one_minus_norm_squared(n_);
  return m <= kPurityTolerance ? 0.0 : m;
}

DensityMatrix::DensityMatrix(const ComplexMatrix2& m) : m_(m) {
  if (!bures::is_finite(m)) throw InvalidState("density matrix has non-finite entries");
  if (hermiticity_defect(m) > kStructuralTolerance) {
    throw InvalidState("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - 1.0) > kStructuralTolerance) {
    throw InvalidState("density matrix trace differs from 1");
  }
  const EigenPair ev = eigenvalues_unchecked(m);
  if (ev.minus < -kStructuralTolerance) {
    throw InvalidState("density matrix is not positive semidefinite");
  }
  const Vec3 n = bloch_components(m);
  if (bures::norm(n) > 1.0 + kBallTolerance) {
    throw InvalidState("density matrix Bloch vector lies outside the unit ball");
  }
  const double expected_det = 0.25 * (1.0 - dot(n, n));
  if (std::abs(m.determinant().real() - expected_det) > kDerivedTolerance) {
    throw InvalidState("density matrix determinant inconsistent with its Bloch vector");
  }
}

DensityMatrix density_from_bloch(const BlochVector& n) {
  const Vec3& v = n.vec();
  return DensityMatrix(ComplexMatrix2{0.5 * (1.0 + v.z), Complex(0.5 * v.x, -0.5 * v.y),
                                      Complex(0.5 * v.x, 0.5 * v.y), 0.5 * (1.0 - v.z)});
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  return BlochVector(bloch_components(rho.matrix()));
}

EigenPair hermitian_eigenvalues(const ComplexMatrix2& m) {
  if (!is_finite(m)) throw NotHermitian("matrix has non-finite entries");
  if (hermiticity_defect(m) > kDerivedTolerance) {
    throw NotHermitian("matrix is not Hermitian within tolerance");
  }
  return eigenvalues_unchecked(m);
}

EigenPair density_eigenvalues(const DensityMatrix& rho) {
  EigenPair ev = eigenvalues_unchecked(rho.matrix());
  // lambda+ >= 1/2 for unit trace, so det / lambda+ recovers lambda- to full
  // relative accuracy where mean - half_gap would cancel.
  ev.minus = std::max(0.0, hermitian_determinant(rho.matrix())) / ev.plus;
  // lambda- = (1 - |n|)/2 ~ (1 - |n|^2)/4
  if (ev.minus <= 0.25 * kPurityTolerance) ev.minus = 0.0;
  return ev;
}

double density_determinant(const DensityMatrix& rho) {
  const EigenPair ev = density_eigenvalues(rho);
  return ev.minus * ev.plus;
}

ComplexMatrix2 sqrt_density_closed_form(const DensityMatrix& rho) {
  const BlochVector n = bloch_from_density(rho);
  if (n.norm() > kSpectralSqrtNorm) {
    throw OutOfRegime("closed-form square root needs |n| <= 1 - 1e-9");
  }
  // With tanh(phi) = |n| and s = sqrt(1 - |n|^2) = 1/cosh(phi):
  //   cosh(phi/2) / sqrt(2 cosh phi) = sqrt(1 + s) / 2
  //   tanh(phi/2) / |n|              = 1 / (1 + s)
  const double s = std::sqrt(n.mixedness());
  const double scale = 0.5 * std::sqrt(1.0 + s);
  const double slope = 1.0 / (1.0 + s);
  return Complex(scale) *
         (ComplexMatrix2::identity() + Complex(slope) * pauli_dot(n.vec()));
}

ComplexMatrix2 sqrt_density_spectral(const DensityMatrix& rho) {
  return spectral_sqrt(rho.matrix(), density_eigenvalues(rho));
}

ComplexMatrix2 sqrt_density(const DensityMatrix& rho) {
  if (bloch_from_density(rho).norm() > kSpectralSqrtNorm) {
    return sqrt_density_spectral(rho);
  }
  return sqrt_density_closed_form(rho);
}

}  // namespace bures
