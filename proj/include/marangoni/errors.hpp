#pragma once

#include <stdexcept>
#include <string>

namespace marangoni {

/// Invalid input parameters (k < -1, nonpositive density, degenerate forcing, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The Pade far-field closure could not fix the free constant.
class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular Toeplitz system while building an approximant.
class DegeneratePadeError : public ClosureError {
 public:
  using ClosureError::ClosureError;
};

/// The RK4 shooting oracle failed (no bracket, blowup, residual not met).
class ShootingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace marangoni
