#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hilbertnorm/quadrature.hpp"

namespace hilbertnorm {

using cplx = std::complex<double>;

/// Analytic function on the unit disk represented by its truncated Taylor
/// coefficients a_0 .. a_{N-1}.
class TaylorFunction {
 public:
  explicit TaylorFunction(std::vector<cplx> coeffs);

  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t k) const { return coeffs_[k]; }

  // Horner evaluation of the polynomial, valid for any z.
  cplx horner(cplx z) const noexcept;

  TaylorFunction scaled(cplx c) const;
  friend TaylorFunction operator+(const TaylorFunction& f, const TaylorFunction& g);

 private:
  std::vector<cplx> coeffs_;
};

struct SeriesValue {
  cplx value;
  // (max_k |a_k|) |z|^N / (1 - |z|)
  double tail_bound;
};

/// Evaluates the truncated series at |z| < 1 and reports a geometric tail
/// bound. Throws DomainError for |z| >= 1.
SeriesValue evaluate(const TaylorFunction& f, cplx z);

/// Coefficients of f_alpha(z) = (1 - z)^(-alpha): a_0 = 1,
/// a_k = a_{k-1} (k - 1 + alpha) / k.
TaylorFunction falpha_coeffs(double alpha, int n);

/// A function evaluated on the disk. Besides z the evaluator receives 1 - z,
/// which callers compute without cancellation where they can (e.g. when z is
/// the image of a map that approaches 1). Functions with a singularity at
/// z = 1 use it; everything else may ignore it.
class DiskFunction {
 public:
  using Evaluator = std::function<cplx(cplx z, cplx one_minus_z)>;

  DiskFunction(Evaluator fn, std::string label);

  static DiskFunction from_plain(std::function<cplx(cplx)> fn, std::string label);
  static DiskFunction from_taylor(TaylorFunction f, std::string label = "taylor");

  cplx operator()(cplx z) const { return fn_(z, 1.0 - z); }
  cplx operator()(cplx z, cplx one_minus_z) const { return fn_(z, one_minus_z); }

  const std::string& label() const noexcept { return label_; }

 private:
  Evaluator fn_;
  std::string label_;
};

/// Closed-form f_alpha(z) = (1 - z)^(-alpha), principal branch.
DiskFunction falpha(double alpha);
/// g_alpha = f_alpha / 2^alpha, normalized in the growth space of order alpha.
DiskFunction galpha(double alpha);

struct SpaceSpec {
  enum class Kind { bergman, korenblum };
  Kind kind;
  double exponent;  // p for bergman, alpha for korenblum

  static SpaceSpec bergman(double p);       // requires 2 < p < 4
  static SpaceSpec korenblum(double alpha);  // requires 0 < alpha < 1
  std::string name() const;
};

struct NormGrid {
  std::string kind;       // "polar_quadrature" or "polar_grid"
  int radial = 0;         // radial nodes (max over angular slices for quadrature)
  int angular = 0;        // angular nodes (max over radii for quadrature)
  double r_max = 1.0;
  long evals = 0;
  double quad_err = 0.0;  // radial quadrature error estimate, if any
};

struct NormEstimate {
  SpaceSpec space;
  double value = 0.0;
  NormGrid grid;
  double tail_bound = 0.0;
};

struct BergmanOptions {
  quad::QuadratureConfig radial{};
  int min_angular = 16;
  int max_angular = 1 << 15;
  double angular_rel_tol = 1e-13;
};

/// A^p norm (normalized area measure) by iterated quadrature in polar form:
/// tanh-sinh in r over (0, 1), periodic trapezoid in theta refined by
/// doubling until successive angular means agree to angular_rel_tol.
/// The radial rule never samples r = 1, so the whole disk is covered and
/// tail_bound is 0.
NormEstimate bergman_norm(const DiskFunction& f, double p, const BergmanOptions& opt = {});
NormEstimate bergman_norm(const TaylorFunction& f, double p, const BergmanOptions& opt = {});

struct KorenblumGrid {
  int radial = 400;
  int angular = 720;
  double r_max = 1.0 - 1e-6;
  int refine_rounds = 4;
};

/// sup_z (1 - |z|^2)^alpha |f(z)| over a polar grid whose radii cluster
/// geometrically toward r_max, followed by alternating golden-section
/// refinement in r and theta around the best cell. The result is the largest
/// value sampled, hence a lower bound on the true supremum.
NormEstimate korenblum_norm(const DiskFunction& f, double alpha, const KorenblumGrid& grid = {});
NormEstimate korenblum_norm(const TaylorFunction& f, double alpha,
                            const KorenblumGrid& grid = {});

}  // namespace hilbertnorm
