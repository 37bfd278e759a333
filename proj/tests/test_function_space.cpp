#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hilbertnorm/error.hpp"
#include "hilbertnorm/function_space.hpp"

using namespace hilbertnorm;

namespace {

TaylorFunction monomial(int k) {
  std::vector<cplx> c(static_cast<std::size_t>(k + 1), 0.0);
  c.back() = 1.0;
  return TaylorFunction(std::move(c));
}

}  // namespace

TEST_CASE("evaluate") {
  const TaylorFunction one({1.0, 0.0, 0.0, 0.0});
  CHECK(evaluate(one, {0.3, -0.7}).value == cplx(1.0, 0.0));

  const TaylorFunction geo(std::vector<cplx>(64, 1.0));
  const auto v = evaluate(geo, 0.5);
  CHECK(std::abs(v.value - 2.0) <= v.tail_bound);
  CHECK(v.tail_bound == doctest::Approx(std::pow(0.5, 64) / 0.5));

  CHECK(evaluate(falpha_coeffs(0.5, 32), 0.0).value == cplx(1.0, 0.0));
  CHECK_THROWS_AS(evaluate(geo, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate(geo, cplx(0.8, 0.6)), DomainError);
  CHECK_THROWS_AS(TaylorFunction({}), DomainError);
}

TEST_CASE("falpha coefficients") {
  const auto f = falpha_coeffs(0.5, 256);
  CHECK(f[0] == cplx(1.0));
  CHECK(f[1].real() == doctest::Approx(0.5));
  CHECK(f[2].real() == doctest::Approx(0.375));
  for (std::size_t k = 1; k < f.size(); ++k) {
    CHECK(f[k].real() > 0.0);
    CHECK(f[k].real() < f[k - 1].real());
  }
  const auto v = evaluate(f, 0.5);
  CHECK(std::abs(v.value - std::sqrt(2.0)) < 1e-12);

  CHECK_THROWS_AS(falpha_coeffs(1.0, 4), DomainError);
  CHECK_THROWS_AS(falpha_coeffs(0.0, 4), DomainError);
  CHECK_THROWS_AS(falpha_coeffs(0.5, 0), DomainError);
}

TEST_CASE("falpha coefficients decay like k^(alpha-1)") {
  // a_k ~ k^{alpha-1}/Gamma(alpha), so a_{2k}/a_k -> 2^{alpha-1}.
  const double alpha = 0.9;
  const int k = 50000;
  const auto f = falpha_coeffs(alpha, 2 * k + 1);
  const double ratio = f[2 * k].real() / f[k].real();
  CHECK(std::abs(ratio - std::pow(2.0, alpha - 1.0)) < 1e-5);
}

TEST_CASE("closed-form f_alpha matches its Taylor series inside the disk") {
  const auto series = falpha_coeffs(0.3, 400);
  const auto closed = falpha(0.3);
  for (cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0.6, -0.2)}) {
    CHECK(std::abs(evaluate(series, z).value - closed(z)) < 1e-12);
  }
  CHECK(std::abs(galpha(0.3)(0.5) - closed(0.5) / std::pow(2.0, 0.3)) < 1e-15);
}

TEST_CASE("space specs validate their exponent") {
  CHECK(SpaceSpec::bergman(3.0).exponent == 3.0);
  CHECK_THROWS_AS(SpaceSpec::bergman(2.0), DomainError);
  CHECK_THROWS_AS(SpaceSpec::bergman(4.0), DomainError);
  CHECK_THROWS_AS(SpaceSpec::korenblum(1.0), DomainError);
  CHECK(SpaceSpec::korenblum(0.4).name() == "hinf");
}

TEST_CASE("bergman norm of monomials") {
  CHECK(std::abs(bergman_norm(monomial(0), 3.0).value - 1.0) < 1e-12);
  CHECK(std::abs(bergman_norm(monomial(1), 3.0).value - std::cbrt(0.4)) < 1e-10);
  CHECK(std::abs(bergman_norm(monomial(2), 3.0).value - std::cbrt(0.25)) < 1e-10);
  for (double p : {2.5, 3.0, 3.5}) {
    for (int k = 0; k <= 3; ++k) {
      const double exact = std::pow(2.0 / (k * p + 2.0), 1.0 / p);
      CAPTURE(p);
      CAPTURE(k);
      CHECK(std::abs(bergman_norm(monomial(k), p).value - exact) < 1e-8);
    }
  }
}

TEST_CASE("bergman norm against a closed form: f = 1 + z at p = 2") {
  // ||1 + z||_{A^2}^2 = 1 + 1/2
  const TaylorFunction f({1.0, 1.0});
  CHECK(std::abs(bergman_norm(f, 2.0).value - std::sqrt(1.5)) < 1e-10);
}

TEST_CASE("norms are homogeneous") {
  const TaylorFunction f({0.5, cplx(0.0, 1.0), -0.25, cplx(0.1, 0.2)});
  const cplx c(-1.5, 2.0);
  const double a = bergman_norm(f, 3.0).value;
  const double b = bergman_norm(f.scaled(c), 3.0).value;
  CHECK(std::abs(b - std::abs(c) * a) < 1e-10 * b);

  const double ka = korenblum_norm(f, 0.4).value;
  const double kb = korenblum_norm(f.scaled(c), 0.4).value;
  CHECK(std::abs(kb - std::abs(c) * ka) < 1e-10 * kb);
}

TEST_CASE("korenblum norm examples") {
  const auto one = korenblum_norm(TaylorFunction({1.0}), 0.5);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));

  for (double alpha : {0.2, 0.5, 0.8}) {
    CAPTURE(alpha);
    CHECK(std::abs(korenblum_norm(falpha(alpha), alpha).value - std::pow(2.0, alpha)) < 1e-3);
    CHECK(std::abs(korenblum_norm(galpha(alpha), alpha).value - 1.0) < 1e-3);
  }
}

TEST_CASE("korenblum norm does not decrease under nested grid refinement") {
  const TaylorFunction poly({1.0, cplx(0.3, -0.8), 0.0, cplx(-0.6, 0.2), 0.4});
  for (const DiskFunction& f : {DiskFunction::from_taylor(poly), falpha(0.6)}) {
    double prev = 0.0;
    for (int scale : {1, 2, 4}) {
      KorenblumGrid g;
      g.radial = 50 * scale + 1;
      g.angular = 90 * scale;
      const double v = korenblum_norm(f, 0.6, g).value;
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("radial profile of f_alpha increases toward 2^alpha") {
  const double alpha = 0.7;
  const auto f = falpha(alpha);
  double prev = 0.0;
  for (int j = 0; j <= 60; ++j) {
    const double u = std::pow(10.0, -0.1 * j);
    const double r = 1.0 - u;
    const double v = std::pow(u * (1.0 + r), alpha) * std::abs(f(r, u));
    CHECK(v > prev);
    CHECK(v <= std::pow(2.0, alpha));
    prev = v;
  }
  CHECK(std::abs(prev - std::pow(2.0, alpha)) < 1e-5);
}
