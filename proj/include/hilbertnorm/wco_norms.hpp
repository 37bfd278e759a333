#pragma once

#include <optional>
#include <string_view>

#include "hilbertnorm/function_space.hpp"
#include "hilbertnorm/quadrature.hpp"

// Norms of the weighted composition operators T_t on the growth space of
// order alpha, and the resulting lower/upper bounds for the Hilbert matrix
// operator on that space.
namespace hilbertnorm::wco {

enum class Regime { boundary_formula, interior_max };
std::string_view to_string(Regime r);

struct TtNormBreakdown {
  double alpha;
  double t;
  Regime regime;
  std::optional<double> x0;
  double value;
};

/// (3 alpha - 2) / (4 alpha - 2); requires alpha > 1/2.
double threshold_tstar(double alpha);

struct QuadraticRoot {
  double x0;
  double one_minus_x0;  // computed without cancellation
};

/// Coefficients of p(x) = (1-2a) x^2 + (4at - 2t + 2a) x + (1-2a) t^2 - 1.
struct Quadratic {
  double a2, a1, a0;
  double operator()(double x) const noexcept { return (a2 * x + a1) * x + a0; }
  double scale(double x) const noexcept;  // |a2| x^2 + |a1| |x| + |a0|
};
Quadratic maximizer_quadratic(double alpha, double t);

/// Smaller-magnitude root x0 of p for alpha > 2/3, in rationalized form
///   x0 = (1 - (1-2a) t^2) / (a + (2a-1) t + sqrt(D)),
/// D = 4a^2 t - 2at + a^2 - 2a + 1.
double quadratic_x0(double alpha, double t);
QuadraticRoot quadratic_x0_detail(double alpha, double t);

/// G(x) = (1-x)^{2a-1} ((1-t+x) / ((1-t)^2 (1+t-x)))^a on [t-1, 1-t].
double G_eval(double alpha, double t, double x);

/// F(z) = |1-(1-t)z|^{2a-1} ((1-|z|^2) / (|1-(1-t)z|^2 - t^2))^a, |z| < 1.
double F_eval(double alpha, double t, cplx z);

/// R(z) = 1 - |z - 1|.
double R_project(cplx z);

/// Norm of T_t on the growth space of order alpha, with the case split on
/// alpha and t. At t = t* exactly the boundary formula is used.
TtNormBreakdown tt_norm(double alpha, double t);

/// pi / sin(alpha pi), valid for 0 < alpha < 1.
double hinf_lower_bound(double alpha);

struct HinfUpperBound {
  double alpha;
  double value;
  bool exact;                           // alpha <= 2/3
  std::optional<double> regime_split_t; // t* when alpha > 2/3
  double quadrature_err;                // err estimate of the integral route
  double integral_value;                // int_0^1 ||T_t|| dt by quadrature
  long evals;
};

/// For alpha <= 2/3 returns pi/sin(alpha pi) and integrates
/// t^{a-1} (1-t)^{-a} over (0, 1) as a check. For alpha > 2/3 returns
///   int_0^{t*} G(x0(t)) dt + int_{t*}^1 t^{a-1} (1-t)^{-a} dt.
HinfUpperBound hinf_upper_bound(double alpha, const quad::QuadratureConfig& cfg = {});

struct RadialSweep {
  double sup;
  double argmax_r;
  int samples;
};

/// sup over 0 <= r <= r_max of |psi_alpha(r)| (1 - r^2)^alpha |g_alpha(r)|,
/// sampled on n radii clustered geometrically toward r_max.
RadialSweep lower_bound_radial_sweep(double alpha, double r_max, int n,
                                     const quad::QuadratureConfig& cfg = {});

}  // namespace hilbertnorm::wco
