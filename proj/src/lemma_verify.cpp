#include "hilbertnorm/lemma_verify.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hilbertnorm/error.hpp"
#include "hilbertnorm/parallel.hpp"
#include "hilbertnorm/specfun.hpp"

namespace hilbertnorm::lemma {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void require_p(double p, const char* fn) {
  require(p > 2.0 && p < 4.0, std::string(fn) + ": p must lie in (2, 4), got " + std::to_string(p));
}

double psi_p_with_complement(double p, double t, double one_minus_t) {
  const double e = 2.0 / p;
  return std::pow(t, e - 1.0) * std::pow(one_minus_t, -e);
}

// int_0^s psi_p(t) dt
double psi_p_partial(double p, double s, const quad::QuadratureConfig& cfg) {
  const double oms = 1.0 - s;
  return quad::integrate(
             [&](const quad::Abscissa& n) {
               return psi_p_with_complement(p, n.from_a, oms + n.to_b);
             },
             0.0, s, cfg)
      .value;
}

}  // namespace

double g_x_eval(double x, double y) {
  require(x > 1.0, "g_x_eval: x must exceed 1, got " + std::to_string(x));
  require(y >= 0.0 && y <= 1.0, "g_x_eval: y must lie in [0, 1], got " + std::to_string(y));
  const double d = x + y - x * y;
  require(d > 0.0, "g_x_eval: x + y - xy must be positive");
  return specfun::digamma(1.0 + x) - specfun::digamma(x + y) - (1.0 - y) / d;
}

double h_y_eval(double x, double y) {
  require(x >= 1.0, "h_y_eval: x must be >= 1, got " + std::to_string(x));
  require(y > 0.0 && y < 1.0, "h_y_eval: y must lie in (0, 1), got " + std::to_string(y));
  const double d = x + y - x * y;
  require(d > 0.0, "h_y_eval: x + y - xy must be positive");
  return specfun::lgamma(1.0 + x) + specfun::lgamma(1.0 + y) - specfun::lgamma(x + y) -
         std::log(d);
}

double check_beta_bound(double x, double y) {
  require(x > 1.0, "check_beta_bound: x must exceed 1, got " + std::to_string(x));
  require(y > 0.0 && y < 1.0, "check_beta_bound: y must lie in (0, 1), got " + std::to_string(y));
  return (x + y - x * y) / (x * y) - specfun::beta(x, y);
}

double check_lemma32(double p) {
  require_p(p, "check_lemma32");
  return 1.0 / ((p - 2.0) * (4.0 - p)) - specfun::beta(2.0 / p, 2.0 * (p - 2.0));
}

double psi_p_eval(double p, double t) {
  require(p > 0.0, "psi_p_eval: p must be positive");
  require(t > 0.0 && t < 1.0, "psi_p_eval: t must lie in (0, 1), got " + std::to_string(t));
  return psi_p_with_complement(p, t, 1.0 - t);
}

double F_p_eval(double p, double s, const quad::QuadratureConfig& cfg) {
  require_p(p, "F_p_eval");
  require(s >= 0.0 && s <= 1.0, "F_p_eval: s must lie in [0, 1], got " + std::to_string(s));
  const double e = 2.0 / p;
  const double b = specfun::beta(e, 1.0 - e);
  const double kink = std::pow(s, 2.0 * (p - 2.0));
  auto integrand = [&](const quad::Abscissa& n) {
    const double t = n.from_a;
    const double weight = t < s ? kink : std::pow(t, 2.0 * (p - 2.0));
    return psi_p_with_complement(p, t, n.to_b) * weight;
  };
  double integral;
  if (s > 0.0 && s < 1.0) {
    const double splits[] = {s};
    integral = quad::integrate_split(integrand, 0.0, 1.0, splits, cfg).value;
  } else {
    integral = quad::integrate(integrand, 0.0, 1.0, cfg).value;
  }
  const double s2 = s * s;
  return ((4.0 - p) / 2.0 + (p - 2.0) / 2.0 * s2 * s2) * b - integral;
}

double F_p_prime(double p, double s, const quad::QuadratureConfig& cfg) {
  require_p(p, "F_p_prime");
  require(s > 0.0 && s <= 1.0, "F_p_prime: s must lie in (0, 1], got " + std::to_string(s));
  const double e = 2.0 / p;
  const double b = specfun::beta(e, 1.0 - e);
  return 2.0 * (p - 2.0) * std::pow(s, 2.0 * p - 5.0) *
         (b * std::pow(s, 8.0 - 2.0 * p) - psi_p_partial(p, s, cfg));
}

std::optional<double> t0_root(double p, double s) {
  require(std::isfinite(p), "t0_root: p must be finite");
  require(s > 0.0 && s < 1.0, "t0_root: s must lie in (0, 1), got " + std::to_string(s));
  const double x = (4.0 - p) * p;
  const double sx = std::pow(s, x);
  const double t0 = (sx - s) / (sx - 1.0);
  if (t0 >= 0.0 && t0 < s) return t0;
  return std::nullopt;
}

double H_ps_eval(double p, double s, double t) {
  require(p > 0.0, "H_ps_eval: p must be positive");
  require(s > 0.0 && s < 1.0, "H_ps_eval: s must lie in (0, 1)");
  require(t >= 0.0 && t < s, "H_ps_eval: t must lie in [0, s), got " + std::to_string(t));
  const double e = 2.0 / p;
  return std::pow(s, 8.0 - 2.0 * p) * std::pow(s - t, -e) - std::pow(1.0 - t, -e);
}

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::beta_bound:
      return "beta_bound";
    case LemmaId::beta_2p:
      return "beta_2p";
    case LemmaId::Fp_nonpositive:
      return "Fp_nonpositive";
  }
  return "?";
}

LemmaId lemma_from_string(std::string_view name) {
  if (name == "beta_bound") return LemmaId::beta_bound;
  if (name == "beta_2p") return LemmaId::beta_2p;
  if (name == "Fp_nonpositive") return LemmaId::Fp_nonpositive;
  throw DomainError("unknown lemma '" + std::string(name) +
                    "' (expected beta_bound, beta_2p or Fp_nonpositive)");
}

Axis Axis::linear(std::string name, double lo, double hi, int n) {
  require(n >= 1 && lo <= hi, "Axis::linear: need n >= 1 and lo <= hi");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  if (n > 1) v.back() = hi;
  return {std::move(name), "linear", std::move(v)};
}

Axis Axis::log(std::string name, double lo, double hi, int n) {
  require(n >= 1 && lo > 0.0 && lo <= hi, "Axis::log: need n >= 1 and 0 < lo <= hi");
  std::vector<double> v(static_cast<std::size_t>(n));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = n == 1 ? lo : std::exp(llo + (lhi - llo) * i / (n - 1));
  }
  v.front() = lo;
  if (n > 1) v.back() = hi;
  return {std::move(name), "log", std::move(v)};
}

Axis Axis::stepped(std::string name, double lo, double hi, double step) {
  require(step > 0.0 && lo <= hi, "Axis::stepped: need step > 0 and lo <= hi");
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    double x = lo + static_cast<double>(i) * step;
    if (std::abs(x - hi) < 1e-9 * step) x = hi;
    v[static_cast<std::size_t>(i)] = x;
  }
  return {std::move(name), "stepped", std::move(v)};
}

std::size_t GridSpec::size() const {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

std::vector<double> GridSpec::point(std::size_t flat_index) const {
  std::vector<double> pt(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t len = axes[k].values.size();
    pt[k] = axes[k].values[flat_index % len];
    flat_index /= len;
  }
  return pt;
}

GridSpec default_grid(LemmaId id) {
  switch (id) {
    case LemmaId::beta_bound:
      return {{Axis::log("x", 1.01, 50.0, 200), Axis::linear("y", 0.01, 0.99, 99)}};
    case LemmaId::beta_2p:
      return {{Axis::linear("p", 2.01, 3.99, 199)}};
    case LemmaId::Fp_nonpositive:
      return {{Axis::stepped("p", 2.1, 3.9, 0.05), Axis::stepped("s", 0.0, 1.0, 0.05)}};
  }
  throw InternalError("default_grid: unknown lemma");
}

double default_tolerance(LemmaId id) {
  switch (id) {
    case LemmaId::beta_bound:
      return 0.0;
    case LemmaId::beta_2p:
      return 1e-12;
    case LemmaId::Fp_nonpositive:
      return 1e-8;
  }
  throw InternalError("default_tolerance: unknown lemma");
}

VerificationReport run_verification(LemmaId id, const GridSpec& grid,
                                    const quad::QuadratureConfig& cfg) {
  return run_verification(id, grid, default_tolerance(id), cfg);
}

VerificationReport run_verification(LemmaId id, const GridSpec& grid, double tolerance,
                                    const quad::QuadratureConfig& cfg) {
  const std::size_t dims = id == LemmaId::beta_2p ? 1 : 2;
  require(grid.axes.size() == dims, "run_verification: " + std::string(to_string(id)) +
                                        " expects a " + std::to_string(dims) + "-axis grid");
  require(grid.size() > 0, "run_verification: empty grid");
  require(tolerance >= 0.0, "run_verification: tolerance must be >= 0");
  cfg.validate();

  auto margin = [&](const std::vector<double>& pt) {
    switch (id) {
      case LemmaId::beta_bound:
        return check_beta_bound(pt[0], pt[1]);
      case LemmaId::beta_2p:
        return check_lemma32(pt[0]);
      case LemmaId::Fp_nonpositive:
        return -F_p_eval(pt[0], pt[1], cfg);
    }
    throw InternalError("run_verification: unknown lemma");
  };

  const std::size_t n = grid.size();
  std::vector<PointMargin> rows(n);
  parallel_for(n, [&](std::size_t i) {
    rows[i].point = grid.point(i);
    try {
      rows[i].margin = margin(rows[i].point);
    } catch (const std::exception& ex) {
      rows[i].margin = std::numeric_limits<double>::quiet_NaN();
      rows[i].error = ex.what();
    }
  });

  VerificationReport rep{id, grid, tolerance, std::numeric_limits<double>::infinity(), {}, true, n,
                         std::nullopt, {}};
  for (const auto& row : rows) {
    if (row.error) {
      if (!rep.error) {
        rep.error = *row.error;
        rep.worst_point = row.point;
      }
      rep.passed = false;
      continue;
    }
    if (row.margin < rep.worst_margin) {
      rep.worst_margin = row.margin;
      if (!rep.error) rep.worst_point = row.point;
    }
  }
  if (!(rep.worst_margin >= -tolerance)) rep.passed = false;
  rep.rows = std::move(rows);
  return rep;
}

}  // namespace hilbertnorm::lemma
