#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hilbertnorm {

// A precondition on an argument was violated. Maps to CLI exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative computation ran out of budget before reaching its tolerance.
// Carries the best estimate obtained so far. Maps to CLI exit code 2.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double err_estimate)
      : std::runtime_error(what), best_(best_estimate), err_(err_estimate) {}

  double best_estimate() const noexcept { return best_; }
  double err_estimate() const noexcept { return err_; }

 private:
  double best_;
  double err_;
};

// An integrand returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

// Internal invariant broken (e.g. a discriminant that cannot be negative was).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hilbertnorm
