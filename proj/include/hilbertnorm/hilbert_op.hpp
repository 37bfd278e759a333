#pragma once

#include <cstddef>

#include "hilbertnorm/function_space.hpp"
#include "hilbertnorm/quadrature.hpp"

namespace hilbertnorm {

/// Parameter of the weighted composition operator
///   T_t f(z) = w_t(z) f(phi_t(z)),  w_t(z) = 1/((t-1)z + 1),  phi_t(z) = t w_t(z).
/// Keeps 1 - t separately so that t close to 1 is represented exactly.
class WCOParams {
 public:
  explicit WCOParams(double t);
  WCOParams(double t, double one_minus_t);

  double t() const noexcept { return t_; }
  double one_minus_t() const noexcept { return one_minus_t_; }

  cplx weight(cplx z) const noexcept;  // w_t(z)
  cplx symbol(cplx z) const noexcept;  // phi_t(z)

 private:
  double t_;
  double one_minus_t_;
};

/// T_t f(z) for |z| < 1. Throws DomainError for |z| >= 1.
cplx wco_apply(const WCOParams& params, const DiskFunction& f, cplx z);

/// Entry (n, k) of the Hilbert matrix, 1/(n + k + 1).
double hilbert_matrix_entry(std::size_t n, std::size_t k) noexcept;

/// Coefficient route: b_n = sum_{k<N} a_k / (n + k + 1), n < m.
/// m = 0 means "same length as the input".
TaylorFunction hilbert_coeffs(const TaylorFunction& f, std::size_t m = 0);

/// Integral route: H f(z) = int_0^1 T_t f(z) dt, by quadrature in t.
quad::ComplexResult hilbert_integral(const DiskFunction& f, cplx z,
                                     const quad::QuadratureConfig& cfg = {});

/// psi_alpha(z) = int_0^1 (1 - s z)^(alpha-1) s^(-alpha) ds for |z| <= 1,
/// principal branch; H f_alpha = psi_alpha f_alpha.
quad::ComplexResult psi_alpha(double alpha, cplx z, const quad::QuadratureConfig& cfg = {});

}  // namespace hilbertnorm
