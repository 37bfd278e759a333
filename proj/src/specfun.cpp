#include "hilbertnorm/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hilbertnorm/error.hpp"

namespace hilbertnorm::specfun {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> f{};
    f[0] = 1.0;
    for (int n = 1; n <= kMaxFactorial; ++n) f[n] = f[n - 1] * n;
    return f;
  }();
  return table;
}

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be a finite positive real, got " +
                      std::to_string(x));
  }
}

// Lanczos sum for argument x >= 0.5, written in terms of x - 1.
double lanczos_sum(double xm1) {
  double a = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    a += kLanczosCoeffs[i] / (xm1 + static_cast<double>(i));
  }
  return a;
}

double lgamma_large(double x) {  // x >= 0.5
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

bool is_small_integer(double x) {
  return x <= kMaxFactorial + 1 && x == std::floor(x);
}

}  // namespace

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("ToleranceConfig: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw DomainError("ToleranceConfig: rel_tol must be > 0");
  if (max_terms < 1) throw DomainError("ToleranceConfig: max_terms must be >= 1");
}

double gamma(double x) {
  require_positive(x, "gamma");
  if (is_small_integer(x)) return factorials()[static_cast<int>(x) - 1];
  if (x < 0.5) return gamma(x + 1.0) / x;
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm1 + 0.5) * std::exp(-t) *
         lanczos_sum(xm1);
}

double lgamma(double x) {
  require_positive(x, "lgamma");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) return lgamma_large(x + 1.0) - std::log(x);
  return lgamma_large(x);
}

double beta(double s, double t) {
  require_positive(s, "beta");
  require_positive(t, "beta");
  const double lo = s < t ? s : t;
  const double hi = s < t ? t : s;
  return std::exp(lgamma(lo) + lgamma(hi) - lgamma(lo + hi));
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli-number tail: -sum B_{2k} / (2k x^{2k}), k = 1..7
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return std::log(x) - 0.5 * inv - series - shift;
}

double polygamma2(double x, const ToleranceConfig& cfg) {
  require_positive(x, "polygamma2");
  cfg.validate();
  // First neglected Euler-Maclaurin term for f(u) = 2/u^3 is u^{-8}/6.
  double sum = 0.0;
  long k = 0;
  double u = x;
  while (1.0 / (6.0 * std::pow(u, 8)) >= cfg.abs_tol) {
    if (k >= cfg.max_terms) {
      const double tail = 1.0 / (u * u) + 1.0 / (u * u * u);
      throw AccuracyError("polygamma2: series did not converge within max_terms",
                          -2.0 * sum - tail, 1.0 / (6.0 * std::pow(u, 8)));
    }
    sum += 1.0 / (u * u * u);
    ++k;
    u = x + static_cast<double>(k);
  }
  // sum_{k>=K} 2/u^3 = 1/u^2 + 1/u^3 + 1/(2u^4) - 1/(6u^6) + ...
  const double u2 = u * u;
  const double tail = 1.0 / u2 + 1.0 / (u2 * u) + 0.5 / (u2 * u2) - 1.0 / (6.0 * u2 * u2 * u2);
  return -2.0 * sum - tail;
}

}  // namespace hilbertnorm::specfun
