// SPDX-License-Identifier: Apache-2.0
//
// Trace distance and Bures fidelity.
//
// The matrix routes (`*_matrix`) work on density matrices only and never
// touch rapidities, so they can serve as independent evidence for the
// hyperbolic formula in hyperbolic.hpp. The closed and root-based routes
// work on Bloch vectors.
#pragma once

#include "bures/qubit.hpp"

namespace bures {

/// Eigenvalues of sqrt(rho1) rho2 sqrt(rho1).
struct LambdaRoots {
  double plus = 0.0;
  double minus = 0.0;
};

/// Coefficients of Lambda^2 - b Lambda + c = 0 whose roots are LambdaRoots:
/// b = gamma_w / (2 gamma_u gamma_v), c = 1 / (16 gamma_u^2 gamma_v^2).
struct LambdaQuadratic {
  double linear = 0.0;
  double constant = 0.0;

  double residual(double lambda) const {
    return lambda * lambda - linear * lambda + constant;
  }
};

/// (1/2) sum |eig(rho1 - rho2)|
double trace_distance_matrix(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// |u - v| / 2
double trace_distance_bloch(const BlochVector& u, const BlochVector& v);

/// [tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2 by explicit matrix algebra.
///
/// The larger eigenvalue of M = sqrt(rho1) rho2 sqrt(rho1) comes from the
/// symmetrized M directly; the smaller one is det M / Lambda+ with
/// det M = det(sqrt rho1)^2 det rho2, which keeps its relative accuracy when
/// M is nearly singular (near-pure inputs). Throws NumericalFailure when M
/// has an eigenvalue below -1e-10 or the result leaves [0, 1] by more than
/// 1e-12; smaller excursions are clamped.
double bures_fidelity_matrix(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Lambda+- = exp(+-phi_w) / (4 cosh phi_u cosh phi_v). Both inputs must be
/// mixed; throws OutOfRegime for pure states.
LambdaRoots lambda_roots(const BlochVector& u, const BlochVector& v);
LambdaQuadratic lambda_quadratic(const BlochVector& u, const BlochVector& v);

/// (1 + u.v)/2 + sqrt((1 - |u|^2)(1 - |v|^2))/2. Symmetric bit for bit and
/// valid on the closed ball.
double bures_fidelity_closed(const BlochVector& u, const BlochVector& v);

}  // namespace bures
