#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

/// Root of every error raised by the solver.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

/// c - a - b sits exactly on an integer where the z -> 1 - z connection is needed.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A hypergeometric entry of the scattering table failed; carries its 1-based index.
class HFunctionError : public Error {
 public:
  HFunctionError(int index, const std::string& what)
      : Error("h" + std::to_string(index) + ": " + what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Matching denominator vanished: E is at (or numerically at) a spectral singularity.
class SingularMatchingError : public Error {
 public:
  using Error::Error;
};

/// A denominator 2F1 of the eigenvalue equation vanished (pole of the residual).
class SpuriousPoleError : public Error {
 public:
  using Error::Error;
};

class ContinuationStallError : public Error {
 public:
  using Error::Error;
};

class NoFoldError : public Error {
 public:
  using Error::Error;
};

class NoRootError : public Error {
 public:
  using Error::Error;
};

class UnitarityViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dkp
