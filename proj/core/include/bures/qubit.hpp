// SPDX-License-Identifier: Apache-2.0
//
// Two-by-two complex linear algebra and the Bloch-vector <-> density-matrix
// correspondence rho(n) = (1 + sigma . n) / 2.
#pragma once

#include <complex>

#include "bures/vec3.hpp"

namespace bures {

using Complex = std::complex<double>;

/// Largest accepted |n| is 1 + kBallTolerance.
inline constexpr double kBallTolerance = 1e-12;
/// Tolerance for the structural checks on density matrices.
inline constexpr double kStructuralTolerance = 1e-12;
/// Tolerance for quantities derived from several operations.
inline constexpr double kDerivedTolerance = 1e-10;
/// States with 1 - |n|^2 at or below this are exactly pure. The value is a
/// few ulps of 1, so only rounding noise is absorbed.
inline constexpr double kPurityTolerance = 4e-15;
/// Above this norm sqrt_density uses the spectral route.
inline constexpr double kSpectralSqrtNorm = 1.0 - 1e-9;

struct ComplexMatrix2 {
  Complex a11{0.0};
  Complex a12{0.0};
  Complex a21{0.0};
  Complex a22{0.0};

  static constexpr ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr ComplexMatrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr ComplexMatrix2 pauli_y() {
    return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
  }
  static constexpr ComplexMatrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
  static constexpr ComplexMatrix2 diagonal(double d1, double d2) {
    return {d1, 0.0, 0.0, d2};
  }

  Complex trace() const { return a11 + a22; }
  Complex determinant() const { return a11 * a22 - a12 * a21; }
  ComplexMatrix2 adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }

  ComplexMatrix2& operator+=(const ComplexMatrix2& o);
  ComplexMatrix2& operator-=(const ComplexMatrix2& o);
  ComplexMatrix2& operator*=(Complex s);
};

ComplexMatrix2 operator+(ComplexMatrix2 a, const ComplexMatrix2& b);
ComplexMatrix2 operator-(ComplexMatrix2 a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(Complex s, ComplexMatrix2 a);

/// sigma . n
ComplexMatrix2 pauli_dot(const Vec3& n);

/// Entry-wise max |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);
/// Entry-wise max |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix2& m);
bool is_finite(const ComplexMatrix2& m);

/// A point of the closed unit ball. Construction rejects non-finite
/// components and norms above 1 + kBallTolerance.
/// 1 - |n|^2 with the squares and the subtractions carried out exactly
/// (fma error terms plus compensated summation), so the result keeps its
/// relative accuracy as |n| approaches 1.
double one_minus_norm_squared(const Vec3& n);

/// 1 + u.v, computed the same way; stays accurate as u.v approaches -1.
double one_plus_dot(const Vec3& u, const Vec3& v);

class BlochVector {
 public:
  BlochVector() = default;
  BlochVector(double x, double y, double z);
  explicit BlochVector(const Vec3& n);

  const Vec3& vec() const { return n_; }
  double x() const { return n_.x; }
  double y() const { return n_.y; }
  double z() const { return n_.z; }

  double norm_squared() const { return dot(n_, n_); }
  double norm() const { return bures::norm(n_); }

  /// 1 - |n|^2, snapped to exactly 0 for pure states.
  double mixedness() const;
  bool is_pure() const { return one_minus_norm_squared(n_) <= kPurityTolerance; }

 private:
  Vec3 n_{};
};

inline bool operator==(const BlochVector& a, const BlochVector& b) {
  return a.vec() == b.vec();
}

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix. The constructor
/// validates all of that and throws InvalidState otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix2& m);

  const ComplexMatrix2& matrix() const { return m_; }

 private:
  ComplexMatrix2 m_;
};

struct EigenPair {
  double minus = 0.0;
  double plus = 0.0;
};

/// rho(n) = (1 + sigma . n) / 2
DensityMatrix density_from_bloch(const BlochVector& n);

/// n_k = tr(rho sigma_k)
BlochVector bloch_from_density(const DensityMatrix& rho);

/// Eigenvalues of a Hermitian 2x2 matrix as mean -/+ half-gap, where the
/// half-gap is hypot((a11 - a22)/2, |a12|). Throws NotHermitian beyond
/// kDerivedTolerance.
EigenPair hermitian_eigenvalues(const ComplexMatrix2& m);

/// Spectrum of a density matrix with the smaller eigenvalue clamped at 0 and
/// snapped to 0 for pure states.
EigenPair density_eigenvalues(const DensityMatrix& rho);

/// det rho computed as the product of density_eigenvalues.
double density_determinant(const DensityMatrix& rho);

/// Principal square root. Uses the boost-derived closed form
///
///   sqrt(rho) = cosh(phi/2) / sqrt(2 cosh phi) * (1 + sigma . nhat tanh(phi/2))
///
/// for |n| <= kSpectralSqrtNorm and the spectral decomposition above that,
/// where the closed form degenerates as phi -> infinity.
ComplexMatrix2 sqrt_density(const DensityMatrix& rho);

/// The closed form alone. Throws OutOfRegime above kSpectralSqrtNorm.
ComplexMatrix2 sqrt_density_closed_form(const DensityMatrix& rho);

/// sqrt(l+) P+ + sqrt(l-) P-, valid on the whole ball including pure states.
ComplexMatrix2 sqrt_density_spectral(const DensityMatrix& rho);

}  // namespace bures
