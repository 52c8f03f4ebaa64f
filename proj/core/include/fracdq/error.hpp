#ifndef FRACDQ_ERROR_HPP
#define FRACDQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracdq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates an operation's precondition.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of a function (x outside [a,b], z <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Base for failures of the numerics themselves, as opposed to bad input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A matrix was flagged singular during factorization.
class SingularMatrix : public NumericalError {
 public:
  SingularMatrix(const std::string& what, double condition)
      : NumericalError(what), condition_(condition) {}

  /// Condition estimate of the offending matrix (+inf when unavailable).
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Time stepping produced a NaN or Inf.
class NonFiniteSolution : public NumericalError {
 public:
  NonFiniteSolution(const std::string& what, std::size_t step)
      : NumericalError(what), step_(step) {}

  /// First time-step index whose solution contained a non-finite value.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace fracdq

#endif  // FRACDQ_ERROR_HPP
