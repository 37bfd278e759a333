#pragma once

#include <complex>
#include <concepts>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <type_traits>

namespace hilbertnorm::quad {

enum class Method { tanh_sinh, adaptive_gk };

std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

struct QuadratureConfig {
  Method method = Method::tanh_sinh;
  double target_abs_tol = 1e-10;
  int max_levels = 12;
  long max_evals = 1'000'000;

  void validate() const;
};

template <class T>
struct IntegralResult {
  T value{};
  // tanh_sinh: |I_L - I_{L-1}| for the last two levels.
  // adaptive_gk: sum of |K15 - G7| over the final partition.
  double err_estimate = 0.0;
  long evals = 0;
  int levels = 0;
};

using RealResult = IntegralResult<double>;
using ComplexResult = IntegralResult<std::complex<double>>;

// A sample point handed to the integrand. from_a = x - a and to_b = b - x are
// computed from the node's distance to its nearest endpoint, so they keep full
// relative precision even where x itself has rounded onto a or b.
struct Abscissa {
  double x;
  double from_a;
  double to_b;
};

using RealIntegrand = std::function<double(const Abscissa&)>;
using ComplexIntegrand = std::function<std::complex<double>(const Abscissa&)>;

RealResult integrate_real(const RealIntegrand& f, double a, double b,
                          const QuadratureConfig& cfg = {});
ComplexResult integrate_complex(const ComplexIntegrand& f, double a, double b,
                                const QuadratureConfig& cfg = {});

RealResult integrate_split_real(const RealIntegrand& f, double a, double b,
                                std::span<const double> splits, const QuadratureConfig& cfg = {});
ComplexResult integrate_split_complex(const ComplexIntegrand& f, double a, double b,
                                      std::span<const double> splits,
                                      const QuadratureConfig& cfg = {});

namespace detail {

// Adapts f(x) or f(Abscissa) to the Abscissa-taking form.
template <class F>
auto as_abscissa_integrand(F&& f) {
  if constexpr (std::is_invocable_v<F&, const Abscissa&>) {
    return [fp = std::addressof(f)](const Abscissa& p) { return (*fp)(p); };
  } else {
    return [fp = std::addressof(f)](const Abscissa& p) { return (*fp)(p.x); };
  }
}

template <class F>
using integrand_value_t = std::decay_t<decltype(as_abscissa_integrand(std::declval<F&>())(
    std::declval<const Abscissa&>()))>;

}  // namespace detail

/// Integrates f over (a, b). f may take either a double or an Abscissa, and
/// may return double or std::complex<double>.
///
/// Throws DomainError for a >= b or an invalid config, EvaluationError when f
/// returns a non-finite value, and AccuracyError (carrying the best estimate)
/// when the level or evaluation budget runs out before target_abs_tol.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  auto g = detail::as_abscissa_integrand(f);
  using V = detail::integrand_value_t<F>;
  if constexpr (std::is_same_v<V, std::complex<double>>) {
    return integrate_complex(ComplexIntegrand(g), a, b, cfg);
  } else {
    static_assert(std::is_convertible_v<V, double>, "integrand must return real or complex");
    return integrate_real(RealIntegrand([&g](const Abscissa& p) -> double { return g(p); }), a,
                          b, cfg);
  }
}

/// Integrates over (a, b) as a sum over the sub-intervals cut at the interior
/// points `splits`, which must be strictly increasing and inside (a, b).
/// Values, error estimates and evaluation counts add.
template <class F>
auto integrate_split(F&& f, double a, double b, std::span<const double> splits,
                     const QuadratureConfig& cfg = {}) {
  auto g = detail::as_abscissa_integrand(f);
  using V = detail::integrand_value_t<F>;
  if constexpr (std::is_same_v<V, std::complex<double>>) {
    return integrate_split_complex(ComplexIntegrand(g), a, b, splits, cfg);
  } else {
    return integrate_split_real(
        RealIntegrand([&g](const Abscissa& p) -> double { return g(p); }), a, b, splits, cfg);
  }
}

}  // namespace hilbertnorm::quad
