#pragma once

#include <stdexcept>
#include <string>

namespace hsums {

// Base class for all library failures. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the stated hypotheses of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at (or within 1e-9 of) a pole of the underlying function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A shift parameter landed on an excluded point alpha = m + r - j or m + k - j.
class ExclusionError : public DomainError {
 public:
  ExclusionError(const std::string& what, int offending_j)
      : DomainError(what), offending_j_(offending_j) {}
  int offending_j() const { return offending_j_; }

 private:
  int offending_j_;
};

// Requested an exact/closed form outside the supported parameter set.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Result would not fit in a double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Oracle failed to stabilize within its term or subdivision budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsums
