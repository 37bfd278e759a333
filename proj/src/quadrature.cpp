#include "hilbertnorm/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "hilbertnorm/error.hpp"

namespace hilbertnorm::quad {
namespace {

using cplx = std::complex<double>;

bool finite_value(double v) { return std::isfinite(v); }
bool finite_value(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
double magnitude(double v) { return std::abs(v); }
double magnitude(const cplx& v) { return std::abs(v); }

void check_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("integrate: need finite a < b, got (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  }
}

// ---------------------------------------------------------------------------
// tanh-sinh

// Node at parameter t > 0 on the reference interval [-1, 1]: comp is the
// distance 1 - tanh(pi/2 sinh t) to the nearest endpoint, weight the
// Jacobian (pi/2) cosh t / cosh^2(pi/2 sinh t).
struct DeNode {
  double comp;
  double weight;
};

constexpr double kSmallestComp = 1e-290;
constexpr double kFirstStep = 1.0;
constexpr int kTabulatedLevels = 12;

DeNode de_node(double t) {
  const double u = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * u);
  const double comp = 2.0 * e / (1.0 + e);
  const double ch = std::cosh(u);
  return {comp, 0.5 * std::numbers::pi * std::cosh(t) / (ch * ch)};
}

double de_tmax() {
  // comp(t) ~ 2 exp(-pi sinh t) reaches kSmallestComp here.
  static const double tmax = std::asinh(std::log(2.0 / kSmallestComp) / std::numbers::pi);
  return tmax;
}

std::vector<DeNode> build_level(int level) {
  const double tmax = de_tmax();
  std::vector<DeNode> nodes;
  if (level == 0) {
    for (double t = kFirstStep; t <= tmax; t += kFirstStep) nodes.push_back(de_node(t));
  } else {
    const double h = kFirstStep / static_cast<double>(1L << level);
    for (long j = 0;; ++j) {
      const double t = static_cast<double>(2 * j + 1) * h;
      if (t > tmax) break;
      nodes.push_back(de_node(t));
    }
  }
  return nodes;
}

// Levels 0..kTabulatedLevels are built once on first use; deeper levels are
// generated per call.
const std::vector<DeNode>& tabulated_level(int level) {
  static const auto table = [] {
    std::array<std::vector<DeNode>, kTabulatedLevels + 1> t;
    for (int l = 0; l <= kTabulatedLevels; ++l) t[l] = build_level(l);
    return t;
  }();
  return table[level];
}

template <class T>
IntegralResult<T> tanh_sinh(const std::function<T(const Abscissa&)>& f, double a, double b,
                            const QuadratureConfig& cfg) {
  const double half = 0.5 * (b - a);
  const double mid = a + half;
  long evals = 0;

  auto sample = [&](const Abscissa& p) -> T {
    const T v = f(p);
    ++evals;
    if (!finite_value(v)) {
      throw EvaluationError("integrand returned a non-finite value at x = " + std::to_string(p.x),
                            p.x);
    }
    return v;
  };

  auto add_level = [&](const std::vector<DeNode>& nodes) -> T {
    T s{};
    for (const DeNode& n : nodes) {
      const double d = half * n.comp;
      if (!(d > 0.0) || n.weight == 0.0) continue;
      const double far = half * (2.0 - n.comp);
      s += n.weight * (sample({a + d, d, far}) + sample({b - d, far, d}));
    }
    return s;
  };

  T sum = 0.5 * std::numbers::pi * sample({mid, half, half});
  double h = kFirstStep;
  sum += add_level(tabulated_level(0));
  T prev = half * h * sum;
  T current = prev;
  double err = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    if (level <= kTabulatedLevels) {
      sum += add_level(tabulated_level(level));
    } else {
      sum += add_level(build_level(level));
    }
    current = half * h * sum;
    err = magnitude(current - prev);
    prev = current;
    if (evals > cfg.max_evals) {
      throw AccuracyError("tanh-sinh: evaluation budget exhausted", magnitude(current), err);
    }
    if (level >= 2 && err <= cfg.target_abs_tol) {
      return {current, err, evals, level};
    }
  }
  throw AccuracyError("tanh-sinh: no convergence within max_levels (err estimate " +
                          std::to_string(err) + ")",
                      magnitude(current), err);
}

// ---------------------------------------------------------------------------
// adaptive Gauss-Kronrod 7-15

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
  double lo;
  double hi;
  T value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

template <class T>
IntegralResult<T> adaptive_gk(const std::function<T(const Abscissa&)>& f, double a, double b,
                              const QuadratureConfig& cfg) {
  long evals = 0;
  auto sample = [&](double lo, double hi, double xi) -> T {
    const double half = 0.5 * (hi - lo);
    const double from_a = (lo - a) + half * (1.0 + xi);
    const double to_b = (b - hi) + half * (1.0 - xi);
    const double x = xi >= 0.0 ? b - to_b : a + from_a;
    const T v = f({x, from_a, to_b});
    ++evals;
    if (!finite_value(v)) {
      throw EvaluationError("integrand returned a non-finite value at x = " + std::to_string(x), x);
    }
    return v;
  };
  auto rule = [&](double lo, double hi) -> Panel<T> {
    const double half = 0.5 * (hi - lo);
    T kron = kWgk[7] * sample(lo, hi, 0.0);
    T gauss = kWg[3] * (kron / kWgk[7]);
    for (int i = 0; i < 7; ++i) {
      const T pair = sample(lo, hi, -kXgk[i]) + sample(lo, hi, kXgk[i]);
      kron += kWgk[i] * pair;
      if (i % 2 == 1) gauss += kWg[i / 2] * pair;
    }
    return {lo, hi, half * kron, magnitude(half * (kron - gauss))};
  };

  std::priority_queue<Panel<T>> panels;
  panels.push(rule(a, b));
  T total = panels.top().value;
  double err = panels.top().err;
  int bisections = 0;
  while (err > cfg.target_abs_tol) {
    if (evals + 30 > cfg.max_evals) {
      throw AccuracyError("adaptive GK: evaluation budget exhausted", magnitude(total), err);
    }
    Panel<T> worst = panels.top();
    panels.pop();
    const double m = 0.5 * (worst.lo + worst.hi);
    if (!(m > worst.lo && m < worst.hi)) {
      throw AccuracyError("adaptive GK: interval cannot be bisected further", magnitude(total),
                          err);
    }
    Panel<T> left = rule(worst.lo, m);
    Panel<T> right = rule(m, worst.hi);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    panels.push(left);
    panels.push(right);
    ++bisections;
  }
  // Recompute from the partition to shed accumulated update round-off.
  T sum{};
  double esum = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    esum += panels.top().err;
    panels.pop();
  }
  return {sum, esum, evals, bisections};
}

template <class T>
IntegralResult<T> integrate_impl(const std::function<T(const Abscissa&)>& f, double a, double b,
                                 const QuadratureConfig& cfg) {
  cfg.validate();
  check_interval(a, b);
  switch (cfg.method) {
    case Method::tanh_sinh:
      return tanh_sinh<T>(f, a, b, cfg);
    case Method::adaptive_gk:
      return adaptive_gk<T>(f, a, b, cfg);
  }
  throw InternalError("integrate: unknown method");
}

template <class T>
IntegralResult<T> split_impl(const std::function<T(const Abscissa&)>& f, double a, double b,
                             std::span<const double> splits, const QuadratureConfig& cfg) {
  check_interval(a, b);
  double prev = a;
  for (double s : splits) {
    if (!(s > prev) || !(s < b)) {
      throw DomainError("integrate_split: split points must be strictly increasing inside (a, b)");
    }
    prev = s;
  }
  IntegralResult<T> total;
  double lo = a;
  auto piece = [&](double hi) {
    // Re-base the abscissa so the integrand still sees distances to the
    // outer endpoints a and b.
    const double off_a = lo - a;
    const double off_b = b - hi;
    auto g = [&](const Abscissa& p) -> T {
      return f({p.x, off_a + p.from_a, off_b + p.to_b});
    };
    const auto r = integrate_impl<T>(g, lo, hi, cfg);
    total.value += r.value;
    total.err_estimate += r.err_estimate;
    total.evals += r.evals;
    total.levels = std::max(total.levels, r.levels);
    lo = hi;
  };
  for (double s : splits) piece(s);
  piece(b);
  return total;
}

}  // namespace

std::string_view to_string(Method m) {
  return m == Method::tanh_sinh ? "tanh_sinh" : "adaptive_gk";
}

Method method_from_string(std::string_view name) {
  if (name == "tanh_sinh") return Method::tanh_sinh;
  if (name == "adaptive_gk") return Method::adaptive_gk;
  throw DomainError("unknown quadrature method '" + std::string(name) + "'");
}

void QuadratureConfig::validate() const {
  if (!(target_abs_tol > 0.0)) throw DomainError("QuadratureConfig: target_abs_tol must be > 0");
  if (max_levels < 3 || max_levels > 20) {
    throw DomainError("QuadratureConfig: max_levels must lie in [3, 20]");
  }
  if (max_evals < 1) throw DomainError("QuadratureConfig: max_evals must be >= 1");
}

RealResult integrate_real(const RealIntegrand& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_impl<double>(f, a, b, cfg);
}

ComplexResult integrate_complex(const ComplexIntegrand& f, double a, double b,
                                const QuadratureConfig& cfg) {
  return integrate_impl<cplx>(f, a, b, cfg);
}

RealResult integrate_split_real(const RealIntegrand& f, double a, double b,
                                std::span<const double> splits, const QuadratureConfig& cfg) {
  return split_impl<double>(f, a, b, splits, cfg);
}

ComplexResult integrate_split_complex(const ComplexIntegrand& f, double a, double b,
                                      std::span<const double> splits,
                                      const QuadratureConfig& cfg) {
  return split_impl<cplx>(f, a, b, splits, cfg);
}

}  // namespace hilbertnorm::quad
