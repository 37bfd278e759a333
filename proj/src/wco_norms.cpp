#include "hilbertnorm/wco_norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hilbertnorm/error.hpp"
#include "hilbertnorm/hilbert_op.hpp"
#include "hilbertnorm/parallel.hpp"

namespace hilbertnorm::wco {
namespace {

void require_unit(double v, const char* what, const char* fn) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(fn) + ": " + what + " must lie in (0, 1), got " +
                      std::to_string(v));
  }
}

// G written in terms of u = 1 - x.
double G_from_complement(double alpha, double t, double u) {
  const double omt = 1.0 - t;
  const double ratio = (2.0 - t - u) / (omt * omt * (t + u));
  return std::pow(u, 2.0 * alpha - 1.0) * std::pow(ratio, alpha);
}

double boundary_value(double alpha, double t, double one_minus_t) {
  return std::pow(t, alpha - 1.0) * std::pow(one_minus_t, -alpha);
}

}  // namespace

std::string_view to_string(Regime r) {
  return r == Regime::boundary_formula ? "boundary_formula" : "interior_max";
}

double threshold_tstar(double alpha) {
  if (!(alpha > 0.5) || !std::isfinite(alpha)) {
    throw DomainError("threshold_tstar: alpha must exceed 1/2, got " + std::to_string(alpha));
  }
  return (3.0 * alpha - 2.0) / (4.0 * alpha - 2.0);
}

double Quadratic::scale(double x) const noexcept {
  return std::abs(a2) * x * x + std::abs(a1) * std::abs(x) + std::abs(a0);
}

Quadratic maximizer_quadratic(double alpha, double t) {
  const double c = 1.0 - 2.0 * alpha;
  return {c, 4.0 * alpha * t - 2.0 * t + 2.0 * alpha, c * t * t - 1.0};
}

QuadraticRoot quadratic_x0_detail(double alpha, double t) {
  if (!(alpha > 2.0 / 3.0 && alpha < 1.0)) {
    throw DomainError("quadratic_x0: alpha must lie in (2/3, 1), got " + std::to_string(alpha));
  }
  require_unit(t, "t", "quadratic_x0");
  const double k = 2.0 * alpha - 1.0;
  const double half_b = alpha + k * t;
  const double disc = (1.0 - alpha) * (1.0 - alpha) + 2.0 * alpha * k * t;
  if (!(disc >= 0.0)) throw InternalError("quadratic_x0: negative discriminant");
  const double sq = std::sqrt(disc);
  const double denom = half_b + sq;
  const double x0 = (1.0 + k * t * t) / denom;
  const double one_minus = k * t * (1.0 + 2.0 * alpha / (sq + 1.0 - alpha) - t) / denom;
  return {x0, one_minus};
}

double quadratic_x0(double alpha, double t) { return quadratic_x0_detail(alpha, t).x0; }

double G_eval(double alpha, double t, double x) {
  require_unit(alpha, "alpha", "G_eval");
  require_unit(t, "t", "G_eval");
  if (!(x >= t - 1.0 && x <= 1.0 - t)) {
    throw DomainError("G_eval: x must lie in [t-1, 1-t], got " + std::to_string(x));
  }
  return G_from_complement(alpha, t, 1.0 - x);
}

double F_eval(double alpha, double t, cplx z) {
  require_unit(alpha, "alpha", "F_eval");
  require_unit(t, "t", "F_eval");
  const double r2 = std::norm(z);
  if (!(r2 < 1.0)) throw DomainError("F_eval: need |z| < 1");
  const double m2 = std::norm(1.0 - (1.0 - t) * z);
  return std::pow(m2, alpha - 0.5) * std::pow((1.0 - r2) / (m2 - t * t), alpha);
}

double R_project(cplx z) { return 1.0 - std::abs(z - 1.0); }

TtNormBreakdown tt_norm(double alpha, double t) {
  require_unit(alpha, "alpha", "tt_norm");
  require_unit(t, "t", "tt_norm");
  if (alpha > 2.0 / 3.0) {
    const double tstar = threshold_tstar(alpha);
    if (t < tstar) {
      const QuadraticRoot root = quadratic_x0_detail(alpha, t);
      return {alpha, t, Regime::interior_max, root.x0,
              G_from_complement(alpha, t, root.one_minus_x0)};
    }
  }
  return {alpha, t, Regime::boundary_formula, std::nullopt, boundary_value(alpha, t, 1.0 - t)};
}

double hinf_lower_bound(double alpha) {
  require_unit(alpha, "alpha", "hinf_lower_bound");
  return std::numbers::pi / std::sin(alpha * std::numbers::pi);
}

namespace {

// int_m^1 t^{a-1} (1-t)^{-a} dt for m >= 1/2, with 1 - t = v^{1/(1-a)}, which
// turns the endpoint singularity into a constant factor. Without it the rule
// cannot reach the 1e-290 scale needed once a approaches 1.
quad::RealResult boundary_tail(double alpha, double m, const quad::QuadratureConfig& cfg) {
  const double q = 1.0 / (1.0 - alpha);
  return quad::integrate(
      [alpha, q](double v) { return std::pow(1.0 - std::pow(v, q), alpha - 1.0) * q; }, 0.0,
      std::pow(1.0 - m, 1.0 - alpha), cfg);
}

// int_lo^hi t^{a-1} (1-t)^{-a} dt for hi <= 1/2, with t = u^{1/a}.
quad::RealResult boundary_head(double alpha, double lo, double hi,
                               const quad::QuadratureConfig& cfg) {
  const double q = 1.0 / alpha;
  return quad::integrate(
      [alpha, q](double u) { return std::pow(1.0 - std::pow(u, q), -alpha) * q; },
      std::pow(lo, alpha), std::pow(hi, alpha), cfg);
}

// int_m^1 t^{a-1} (1-t)^{-a} dt for 0 <= m < 1.
quad::RealResult boundary_integral(double alpha, double m, const quad::QuadratureConfig& cfg) {
  if (m >= 0.5) return boundary_tail(alpha, m, cfg);
  const auto head = boundary_head(alpha, m, 0.5, cfg);
  const auto tail = boundary_tail(alpha, 0.5, cfg);
  return {head.value + tail.value, head.err_estimate + tail.err_estimate,
          head.evals + tail.evals, std::max(head.levels, tail.levels)};
}

}  // namespace

HinfUpperBound hinf_upper_bound(double alpha, const quad::QuadratureConfig& cfg) {
  require_unit(alpha, "alpha", "hinf_upper_bound");
  if (alpha <= 2.0 / 3.0) {
    const auto check = boundary_integral(alpha, 0.0, cfg);
    return {alpha,        hinf_lower_bound(alpha), true,       std::nullopt,
            check.err_estimate, check.value,       check.evals};
  }
  const double tstar = threshold_tstar(alpha);
  // Just above 2/3 the threshold can round to zero, leaving no interior piece.
  const auto interior =
      tstar > 0.0 ? quad::integrate(
                        [alpha](const quad::Abscissa& p) {
                          const QuadraticRoot root = quadratic_x0_detail(alpha, p.x);
                          return G_from_complement(alpha, p.x, root.one_minus_x0);
                        },
                        0.0, tstar, cfg)
                  : quad::RealResult{0.0, 0.0, 0, 0};
  const auto tail = boundary_integral(alpha, tstar, cfg);
  const double value = interior.value + tail.value;
  return {alpha, value, false, tstar, interior.err_estimate + tail.err_estimate, value,
          interior.evals + tail.evals};
}

RadialSweep lower_bound_radial_sweep(double alpha, double r_max, int n,
                                     const quad::QuadratureConfig& cfg) {
  require_unit(alpha, "alpha", "lower_bound_radial_sweep");
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw DomainError("lower_bound_radial_sweep: r_max must lie in (0, 1)");
  }
  if (n < 2) throw DomainError("lower_bound_radial_sweep: need n >= 2");
  const DiskFunction g = galpha(alpha);
  const double gap = 1.0 - r_max;
  std::vector<double> values(static_cast<std::size_t>(n));
  std::vector<double> radii(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
    const double u = j + 1 == static_cast<std::size_t>(n)
                         ? gap
                         : std::pow(gap, static_cast<double>(j) / (n - 1));
    const double r = 1.0 - u;
    const double psi = std::abs(psi_alpha(alpha, r, cfg).value);
    values[j] = psi * std::pow(u * (1.0 + r), alpha) * std::abs(g(r, u));
    radii[j] = r;
  });
  std::size_t best = 0;
  for (std::size_t j = 1; j < values.size(); ++j) {
    if (values[j] > values[best]) best = j;
  }
  return {values[best], radii[best], n};
}

}  // namespace hilbertnorm::wco
