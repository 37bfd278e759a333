#pragma once

namespace hilbertnorm::specfun {

struct ToleranceConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  long max_terms = 1'000'000;

  // Throws DomainError if any field is out of range.
  void validate() const;
};

/// Gamma function for x > 0 (Lanczos approximation, g = 7, nine terms).
/// Positive integers up to 170 are returned from an exact factorial table.
double gamma(double x);

/// log Gamma(x) for x > 0.
double lgamma(double x);

/// Beta function B(s, t) = Gamma(s) Gamma(t) / Gamma(s + t) for s, t > 0,
/// evaluated as exp of a log-Gamma sum taken in sorted argument order, so
/// beta(s, t) and beta(t, s) are bitwise identical.
double beta(double s, double t);

/// Digamma psi(x) = Gamma'(x) / Gamma(x) for x > 0. Shifts the argument past
/// 10 with the recurrence psi(x + 1) = psi(x) + 1/x, then uses the
/// asymptotic expansion.
double digamma(double x);

/// Second derivative of digamma, psi''(x) = -2 sum_{k>=0} 1/(x + k)^3.
/// The series is summed directly and its tail is replaced by the
/// Euler-Maclaurin correction; summation stops once the first neglected
/// correction term drops below cfg.abs_tol. Throws AccuracyError if that
/// needs more than cfg.max_terms terms.
double polygamma2(double x, const ToleranceConfig& cfg = {});

}  // namespace hilbertnorm::specfun
