#include "hilbertnorm/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hilbertnorm/error.hpp"
#include "hilbertnorm/parallel.hpp"

namespace hilbertnorm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 1 - r e^{i theta} without cancellation near r = 1, theta = 0.
cplx one_minus_polar(double r, double one_minus_r, double theta) {
  const double s = std::sin(0.5 * theta);
  return {one_minus_r + r * 2.0 * s * s, -r * std::sin(theta)};
}

void require_alpha(double alpha, const char* fn) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(fn) + ": alpha must lie in (0, 1), got " +
                      std::to_string(alpha));
  }
}

template <class F>
double golden_max(F&& f, double lo, double hi, int iters, double& best, double& best_x) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  auto note = [&](double x, double v) {
    if (v > best) {
      best = v;
      best_x = x;
    }
  };
  note(c, fc);
  note(d, fd);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      note(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      note(d, fd);
    }
  }
  return best;
}

}  // namespace

TaylorFunction::TaylorFunction(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("TaylorFunction: need at least one coefficient");
}

cplx TaylorFunction::horner(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TaylorFunction TaylorFunction::scaled(cplx c) const {
  std::vector<cplx> out(coeffs_);
  for (auto& a : out) a *= c;
  return TaylorFunction(std::move(out));
}

TaylorFunction operator+(const TaylorFunction& f, const TaylorFunction& g) {
  std::vector<cplx> out(std::max(f.size(), g.size()), 0.0);
  for (std::size_t k = 0; k < f.size(); ++k) out[k] += f[k];
  for (std::size_t k = 0; k < g.size(); ++k) out[k] += g[k];
  return TaylorFunction(std::move(out));
}

SeriesValue evaluate(const TaylorFunction& f, cplx z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) {
    throw DomainError("evaluate: need |z| < 1, got |z| = " + std::to_string(r));
  }
  double amax = 0.0;
  for (const auto& a : f.coeffs()) amax = std::max(amax, std::abs(a));
  const double tail = amax * std::pow(r, static_cast<double>(f.size())) / (1.0 - r);
  return {f.horner(z), tail};
}

TaylorFunction falpha_coeffs(double alpha, int n) {
  require_alpha(alpha, "falpha_coeffs");
  if (n < 1) throw DomainError("falpha_coeffs: N must be >= 1");
  std::vector<cplx> a(static_cast<std::size_t>(n));
  double ak = 1.0;
  a[0] = ak;
  for (int k = 1; k < n; ++k) {
    ak *= (k - 1 + alpha) / k;
    a[static_cast<std::size_t>(k)] = ak;
  }
  return TaylorFunction(std::move(a));
}

DiskFunction::DiskFunction(Evaluator fn, std::string label)
    : fn_(std::move(fn)), label_(std::move(label)) {}

DiskFunction DiskFunction::from_plain(std::function<cplx(cplx)> fn, std::string label) {
  return DiskFunction([fn = std::move(fn)](cplx z, cplx) { return fn(z); }, std::move(label));
}

DiskFunction DiskFunction::from_taylor(TaylorFunction f, std::string label) {
  return DiskFunction([f = std::move(f)](cplx z, cplx) { return f.horner(z); },
                      std::move(label));
}

DiskFunction falpha(double alpha) {
  require_alpha(alpha, "falpha");
  return DiskFunction([alpha](cplx, cplx omz) { return std::pow(omz, -alpha); },
                      "f_alpha(" + std::to_string(alpha) + ")");
}

DiskFunction galpha(double alpha) {
  require_alpha(alpha, "galpha");
  const double norm = std::pow(2.0, alpha);
  return DiskFunction([alpha, norm](cplx, cplx omz) { return std::pow(omz, -alpha) / norm; },
                      "g_alpha(" + std::to_string(alpha) + ")");
}

SpaceSpec SpaceSpec::bergman(double p) {
  if (!(p > 2.0 && p < 4.0)) {
    throw DomainError("bergman space: p must lie in (2, 4), got " + std::to_string(p));
  }
  return {Kind::bergman, p};
}

SpaceSpec SpaceSpec::korenblum(double alpha) {
  require_alpha(alpha, "korenblum space");
  return {Kind::korenblum, alpha};
}

std::string SpaceSpec::name() const { return kind == Kind::bergman ? "ap" : "hinf"; }

NormEstimate bergman_norm(const DiskFunction& f, double p, const BergmanOptions& opt) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError("bergman_norm: p must be a finite real >= 1, got " + std::to_string(p));
  }
  if (opt.min_angular < 1 || opt.max_angular < opt.min_angular) {
    throw DomainError("bergman_norm: invalid angular resolution bounds");
  }
  int max_angular_used = 0;
  long evals = 0;
  int radial_nodes = 0;

  auto angular_mean = [&](const quad::Abscissa& node) -> double {
    const double r = node.x;
    const double omr = node.to_b;
    auto sample = [&](double theta) {
      const cplx z = std::polar(r, theta);
      ++evals;
      return std::pow(std::abs(f(z, one_minus_polar(r, omr, theta))), p);
    };
    int n = opt.min_angular;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += sample(kTwoPi * k / n);
    double mean = sum / n;
    while (true) {
      if (2 * n > opt.max_angular) {
        throw AccuracyError("bergman_norm: angular refinement exceeded max_angular", mean, 0.0);
      }
      double odd = 0.0;
      for (int k = 0; k < n; ++k) odd += sample(kTwoPi * (2 * k + 1) / (2 * n));
      sum += odd;
      n *= 2;
      const double next = sum / n;
      const bool done = std::abs(next - mean) <= opt.angular_rel_tol * std::abs(next) + 1e-300;
      mean = next;
      if (done) break;
    }
    max_angular_used = std::max(max_angular_used, n);
    ++radial_nodes;
    return 2.0 * r * mean;
  };

  const auto res = quad::integrate(angular_mean, 0.0, 1.0, opt.radial);
  NormEstimate out{SpaceSpec{SpaceSpec::Kind::bergman, p}, std::pow(std::max(res.value, 0.0), 1.0 / p),
                   {"polar_quadrature", radial_nodes, max_angular_used, 1.0, evals,
                    res.err_estimate},
                   0.0};
  return out;
}

NormEstimate bergman_norm(const TaylorFunction& f, double p, const BergmanOptions& opt) {
  return bergman_norm(DiskFunction::from_taylor(f), p, opt);
}

NormEstimate korenblum_norm(const DiskFunction& f, double alpha, const KorenblumGrid& grid) {
  require_alpha(alpha, "korenblum_norm");
  if (grid.radial < 2 || grid.angular < 3) {
    throw DomainError("korenblum_norm: grid needs radial >= 2 and angular >= 3");
  }
  if (!(grid.r_max > 0.0 && grid.r_max < 1.0)) {
    throw DomainError("korenblum_norm: r_max must lie in (0, 1)");
  }
  const int nr = grid.radial;
  const int nt = grid.angular;
  const double gap = 1.0 - grid.r_max;

  // 1 - r_j = gap^{j/(nr-1)}: r_0 = 0, r_{nr-1} = r_max.
  std::vector<double> omr(static_cast<std::size_t>(nr));
  for (int j = 0; j < nr; ++j) {
    omr[static_cast<std::size_t>(j)] =
        j == nr - 1 ? gap : std::pow(gap, static_cast<double>(j) / (nr - 1));
  }
  auto value_at = [&](double one_minus_r, double theta) {
    const double r = 1.0 - one_minus_r;
    const double w = std::pow(one_minus_r * (1.0 + r), alpha);
    return w * std::abs(f(std::polar(r, theta), one_minus_polar(r, one_minus_r, theta)));
  };

  std::vector<double> row_best(static_cast<std::size_t>(nr), -1.0);
  std::vector<int> row_arg(static_cast<std::size_t>(nr), 0);
  parallel_for(static_cast<std::size_t>(nr), [&](std::size_t j) {
    for (int k = 0; k < nt; ++k) {
      const double v = value_at(omr[j], kTwoPi * k / nt);
      if (v > row_best[j]) {
        row_best[j] = v;
        row_arg[j] = k;
      }
    }
  });
  int bj = 0;
  for (int j = 1; j < nr; ++j) {
    if (row_best[static_cast<std::size_t>(j)] > row_best[static_cast<std::size_t>(bj)]) bj = j;
  }
  double best = row_best[static_cast<std::size_t>(bj)];
  long evals = static_cast<long>(nr) * nt;

  // Refinement works in u = 1 - r so the bracket near r_max keeps precision.
  double u = omr[static_cast<std::size_t>(bj)];
  double theta = kTwoPi * row_arg[static_cast<std::size_t>(bj)] / nt;
  const double u_hi = omr[static_cast<std::size_t>(std::max(bj - 1, 0))];
  const double u_lo = omr[static_cast<std::size_t>(std::min(bj + 1, nr - 1))];
  const double dtheta = kTwoPi / nt;
  constexpr int kGoldenIters = 60;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    double bu = u;
    golden_max([&](double uu) { ++evals; return value_at(uu, theta); }, u_lo, u_hi, kGoldenIters,
               best, bu);
    u = bu;
    double bt = theta;
    const double t0 = theta;
    golden_max([&](double tt) { ++evals; return value_at(u, tt); }, t0 - dtheta, t0 + dtheta,
               kGoldenIters, best, bt);
    theta = bt;
  }
  return {SpaceSpec{SpaceSpec::Kind::korenblum, alpha}, best,
          {"polar_grid", nr, nt, grid.r_max, evals, 0.0}, 0.0};
}

NormEstimate korenblum_norm(const TaylorFunction& f, double alpha, const KorenblumGrid& grid) {
  return korenblum_norm(DiskFunction::from_taylor(f), alpha, grid);
}

}  // namespace hilbertnorm
