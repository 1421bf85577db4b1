#pragma once

#include <stdexcept>
#include <string>

namespace matexp {

/// Base of every error raised by the library. Numerical failures derive from
/// NumericalError; malformed input derives from InputError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NonFiniteEntry : public InputError {
 public:
  NonFiniteEntry() : InputError("matrix or vector entry is not finite") {}
};

class SingularMatrix : public NumericalError {
 public:
  explicit SingularMatrix(double det)
      : NumericalError("matrix is singular (det = " + std::to_string(det) + ")"), det_(det) {}
  double det() const { return det_; }

 private:
  double det_;
};

/// An algebraic identity of a decomposition (N^2 = O, P^2 = P, ...) failed by
/// more than the acceptance limit. Usually means the spectrum sits inside the
/// classification tolerance band.
class DegenerateDecomposition : public NumericalError {
 public:
  DegenerateDecomposition(std::string identity, double residual, double limit)
      : NumericalError("degenerate decomposition: residual of " + identity + " is " +
                       std::to_string(residual) + " (limit " + std::to_string(limit) +
                       "); try a different --tol"),
        identity_(std::move(identity)),
        residual_(residual),
        limit_(limit) {}
  const std::string& identity() const { return identity_; }
  double residual() const { return residual_; }
  double limit() const { return limit_; }

 private:
  std::string identity_;
  double residual_;
  double limit_;
};

class DivisionHazard : public NumericalError {
 public:
  DivisionHazard(std::string what, double denominator)
      : NumericalError("denominator " + what + " = " + std::to_string(denominator) +
                       " is below the separation threshold"),
        denominator_(denominator) {}
  double denominator() const { return denominator_; }

 private:
  double denominator_;
};

class Overflow : public NumericalError {
 public:
  explicit Overflow(double t)
      : NumericalError("result overflows the double range at t = " + std::to_string(t)), t_(t) {}
  double t() const { return t_; }

 private:
  double t_;
};

class WrongCase : public Error {
 public:
  using Error::Error;
};

class ProbeExhausted : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotConverged : public NumericalError {
 public:
  NotConverged(int terms, double last_term)
      : NumericalError("series did not converge after " + std::to_string(terms) +
                       " terms (last term " + std::to_string(last_term) + ")") {}
};

}  // namespace matexp
