#include "hilbertnorm/hilbert_op.hpp"

#include <cmath>
#include <string>

#include "hilbertnorm/error.hpp"

namespace hilbertnorm {
namespace {

void require_open_disk(cplx z, const char* fn) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(fn) + ": need |z| < 1, got |z| = " + std::to_string(std::abs(z)));
  }
}

// T_t f(z), given 1 - z. 1 - phi_t(z) = (1 - t)(1 - z) w_t(z).
cplx apply_with_complement(const WCOParams& p, const DiskFunction& f, cplx z, cplx one_minus_z) {
  const cplx w = p.weight(z);
  return w * f(p.t() * w, p.one_minus_t() * one_minus_z * w);
}

}  // namespace

WCOParams::WCOParams(double t) : WCOParams(t, 1.0 - t) {}

WCOParams::WCOParams(double t, double one_minus_t) : t_(t), one_minus_t_(one_minus_t) {
  if (!(t > 0.0 && one_minus_t > 0.0)) {
    throw DomainError("WCOParams: t must lie in (0, 1), got " + std::to_string(t));
  }
}

cplx WCOParams::weight(cplx z) const noexcept { return 1.0 / (1.0 - one_minus_t_ * z); }

cplx WCOParams::symbol(cplx z) const noexcept { return t_ * weight(z); }

cplx wco_apply(const WCOParams& params, const DiskFunction& f, cplx z) {
  require_open_disk(z, "wco_apply");
  return apply_with_complement(params, f, z, 1.0 - z);
}

double hilbert_matrix_entry(std::size_t n, std::size_t k) noexcept {
  return 1.0 / static_cast<double>(n + k + 1);
}

TaylorFunction hilbert_coeffs(const TaylorFunction& f, std::size_t m) {
  if (m == 0) m = f.size();
  std::vector<cplx> b(m);
  for (std::size_t n = 0; n < m; ++n) {
    cplx acc = 0.0;
    for (std::size_t k = f.size(); k-- > 0;) acc += f[k] * hilbert_matrix_entry(n, k);
    b[n] = acc;
  }
  return TaylorFunction(std::move(b));
}

quad::ComplexResult hilbert_integral(const DiskFunction& f, cplx z,
                                     const quad::QuadratureConfig& cfg) {
  require_open_disk(z, "hilbert_integral");
  const cplx omz = 1.0 - z;
  return quad::integrate(
      [&](const quad::Abscissa& node) {
        return apply_with_complement(WCOParams(node.x, node.to_b), f, z, omz);
      },
      0.0, 1.0, cfg);
}

quad::ComplexResult psi_alpha(double alpha, cplx z, const quad::QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("psi_alpha: alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (std::abs(z) > 1.0) {
    throw DomainError("psi_alpha: need |z| <= 1, got |z| = " + std::to_string(std::abs(z)));
  }
  const cplx omz = 1.0 - z;
  // 1 - s z = (1 - s) + s (1 - z); Re > 0 on (0, 1) for |z| <= 1.
  return quad::integrate(
      [&](const quad::Abscissa& node) {
        const double s = node.from_a;
        const cplx base = node.to_b + s * omz;
        return std::pow(base, alpha - 1.0) * std::pow(s, -alpha);
      },
      0.0, 1.0, cfg);
}

}  // namespace hilbertnorm
