// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bures {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Bloch vector or density matrix that does not describe a qubit state.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Matrix input that is not Hermitian within tolerance.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of a route, e.g. a pure state handed to a
/// computation that needs a finite rapidity.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

/// Geometry that collapses (undefined direction, coincident antipodes).
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// Floating-point result violating a mathematical bound by more than the
/// allowed tolerance. Indicates a bug, never a user error.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bures
