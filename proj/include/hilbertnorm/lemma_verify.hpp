#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbertnorm/quadrature.hpp"

// Numerical checks of the Beta-function inequalities behind the Bergman-space
// norm of the Hilbert matrix operator, plus the auxiliary functions used to
// establish them.
namespace hilbertnorm::lemma {

/// g_x(y) = psi(1+x) - psi(x+y) - (1-y)/(x+y-xy); x > 1, y in [0, 1].
double g_x_eval(double x, double y);

/// h_y(x) = log Gamma(1+x) + log Gamma(1+y) - log Gamma(x+y) - log(x+y-xy);
/// x >= 1, y in (0, 1).
double h_y_eval(double x, double y);

/// (x + y - xy)/(xy) - B(x, y); positive for x > 1, 0 < y < 1.
double check_beta_bound(double x, double y);

/// 1/((p-2)(4-p)) - B(2/p, 2(p-2)); nonnegative for 2 < p < 4.
double check_lemma32(double p);

/// psi_p(t) = t^{2/p-1} (1-t)^{-2/p} for t in (0, 1).
double psi_p_eval(double p, double t);

/// F_p(s) = ((4-p)/2 + (p-2)/2 s^4) B(2/p, 1-2/p)
///          - int_0^1 psi_p(t) max{s^2, t^2}^{p-2} dt,
/// with the integral split at the kink t = s.
double F_p_eval(double p, double s, const quad::QuadratureConfig& cfg = {});

/// Closed form F_p'(s) = 2(p-2) s^{2p-5} (B(2/p, 1-2/p) s^{8-2p} - int_0^s psi_p).
double F_p_prime(double p, double s, const quad::QuadratureConfig& cfg = {});

/// Root t0 = (s^x - s)/(s^x - 1), x = (4-p)p, of H_{p,s}(t) = 0 when it lies
/// in [0, s).
std::optional<double> t0_root(double p, double s);

/// H_{p,s}(t) = s^{8-2p} (s-t)^{-2/p} - (1-t)^{-2/p} for 0 <= t < s < 1.
double H_ps_eval(double p, double s, double t);

enum class LemmaId { beta_bound, beta_2p, Fp_nonpositive };
std::string_view to_string(LemmaId id);
LemmaId lemma_from_string(std::string_view name);

struct Axis {
  std::string name;
  std::string spacing;  // "linear", "log" or "stepped"
  std::vector<double> values;

  static Axis linear(std::string name, double lo, double hi, int n);
  static Axis log(std::string name, double lo, double hi, int n);
  // lo, lo + step, ..., hi (hi included when it lies on the lattice)
  static Axis stepped(std::string name, double lo, double hi, double step);
};

struct GridSpec {
  std::vector<Axis> axes;
  std::size_t size() const;
  std::vector<double> point(std::size_t flat_index) const;  // row-major, last axis fastest
};

struct PointMargin {
  std::vector<double> point;
  double margin;
  std::optional<std::string> error;
};

struct VerificationReport {
  LemmaId lemma_id;
  GridSpec grid;
  double tolerance;
  double worst_margin;
  std::vector<double> worst_point;
  bool passed;
  std::size_t points;
  std::optional<std::string> error;  // first failing evaluation, if any
  std::vector<PointMargin> rows;     // one per grid point, grid order
};

/// The grids checked by default: x log-spaced on [1.01, 50] (200) by y on
/// [0.01, 0.99] (99); p on [2.01, 3.99] (199); p = 2.1:0.05:3.9 by s = 0:0.05:1.
GridSpec default_grid(LemmaId id);

/// Declared tolerance: 0 for beta_bound, 1e-12 for beta_2p, 1e-8 for
/// Fp_nonpositive (whose margin is -F_p(s)).
double default_tolerance(LemmaId id);

/// Sweeps the grid in parallel and reduces to the worst margin.
/// passed <=> worst_margin >= -tolerance and no evaluation failed.
VerificationReport run_verification(LemmaId id, const GridSpec& grid,
                                    const quad::QuadratureConfig& cfg = {});
VerificationReport run_verification(LemmaId id, const GridSpec& grid, double tolerance,
                                    const quad::QuadratureConfig& cfg = {});

}  // namespace hilbertnorm::lemma
