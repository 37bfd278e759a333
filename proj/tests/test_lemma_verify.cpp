#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hilbertnorm/error.hpp"
#include "hilbertnorm/lemma_verify.hpp"
#include "hilbertnorm/specfun.hpp"

using namespace hilbertnorm;
using namespace hilbertnorm::lemma;

namespace {
const double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

TEST_CASE("g_x") {
  for (double x : {1.5, 2.0, 2.5, 5.0, 20.0}) {
    CAPTURE(x);
    CHECK(std::abs(g_x_eval(x, 0.0)) < 1e-10);
    CHECK(std::abs(g_x_eval(x, 1.0)) < 1e-10);
  }
  // psi(3) - psi(2.5) - 0.5/1.5 with psi(3) = 3/2 - gamma and
  // psi(5/2) = 8/3 - gamma - 2 ln 2.
  const double oracle = 1.5 - 8.0 / 3.0 + 2.0 * std::log(2.0) - 1.0 / 3.0;
  CHECK(g_x_eval(2.0, 0.5) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(g_x_eval(2.0, 0.5) < 0.0);
  CHECK_THROWS_AS(g_x_eval(0.5, 0.5), DomainError);
}

TEST_CASE("g_x is convex in y") {
  const double h = 1e-3;
  for (double x : {1.5, 2.0, 5.0, 20.0}) {
    for (double y = 0.05; y < 0.96; y += 0.05) {
      const double d2 = g_x_eval(x, y + h) - 2.0 * g_x_eval(x, y) + g_x_eval(x, y - h);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(d2 > 0.0);
      CHECK(g_x_eval(x, y) < 0.0);
    }
  }
}

TEST_CASE("h_y") {
  CHECK(std::abs(h_y_eval(1.0, 0.3)) < 1e-10);
  CHECK(h_y_eval(2.0, 0.5) == doctest::Approx(std::log(4.0 / 3.0) - std::log(1.5)).epsilon(1e-12));
  CHECK(h_y_eval(3.0, 0.5) < h_y_eval(2.0, 0.5));
  for (double y = 0.05; y < 1.0; y += 0.1) {
    double prev = h_y_eval(1.0, y);
    for (double x = 1.1; x < 60.0; x *= 1.1) {
      const double v = h_y_eval(x, y);
      CHECK(v <= prev + 1e-12);
      CHECK((v < 0.0) == (check_beta_bound(x, y) > 0.0));
      prev = v;
    }
  }
}

TEST_CASE("beta bound margin") {
  CHECK(check_beta_bound(2.0, 0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(check_beta_bound(10.0, 0.9) > 0.0);
  // x -> 1+ the margin closes like O(x - 1).
  double prev = 1.0;
  for (double e : {1e-2, 1e-4, 1e-6}) {
    const double m = check_beta_bound(1.0 + e, 0.4);
    CHECK(m > 0.0);
    CHECK(m < prev);
    prev = m;
  }
  CHECK(prev < 1e-5);
  CHECK_THROWS_AS(check_beta_bound(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(check_beta_bound(2.0, 1.0), DomainError);
}

TEST_CASE("beta(2/p, 2(p-2)) margin") {
  CHECK(std::abs(check_lemma32(3.0) - 0.1) < 1e-12);
  CHECK(std::abs(check_lemma32(2.5) - 1.0 / 12.0) < 1e-12);
  CHECK(check_lemma32(3.9) >= 0.0);
  CHECK_THROWS_AS(check_lemma32(2.0), DomainError);
  CHECK_THROWS_AS(check_lemma32(4.0), DomainError);
}

TEST_CASE("psi_p") {
  CHECK(psi_p_eval(4.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(psi_p_eval(3.0, 0.25) ==
        doctest::Approx(std::pow(0.25, -1.0 / 3.0) * std::pow(0.75, -2.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(psi_p_eval(3.0, 0.0), DomainError);
  CHECK_THROWS_AS(psi_p_eval(3.0, 1.0), DomainError);
}

TEST_CASE("F_p") {
  for (double p = 2.1; p < 3.95; p += 0.1) {
    CAPTURE(p);
    CHECK(std::abs(F_p_eval(p, 1.0)) < 1e-9);
  }
  CHECK(std::abs(F_p_eval(3.0, 0.0) + kPi / (9.0 * kSqrt3)) < 1e-10);
  CHECK(F_p_eval(3.8, 0.5) <= 1e-9);
  CHECK_THROWS_AS(F_p_eval(3.0, 1.5), DomainError);
}

TEST_CASE("F_p is nondecreasing when p >= 2 + sqrt 3") {
  for (double p : {2.0 + kSqrt3, 3.75, 3.8, 3.9}) {
    double prev = F_p_eval(p, 0.0);
    for (int i = 1; i <= 50; ++i) {
      const double v = F_p_eval(p, i / 50.0);
      CAPTURE(p);
      CHECK(prev <= v + 1e-8);
      prev = v;
    }
  }
}

TEST_CASE("F_p' matches central differences") {
  const double h = 1e-4;
  CHECK(std::abs(F_p_prime(3.0, 0.5) -
                 (F_p_eval(3.0, 0.5 + h) - F_p_eval(3.0, 0.5 - h)) / (2.0 * h)) < 1e-5);
  for (double p : {2.2, 2.7, 3.3, 3.8}) {
    for (double s = 0.1; s < 0.95; s += 0.1) {
      const double fd = (F_p_eval(p, s + h) - F_p_eval(p, s - h)) / (2.0 * h);
      CAPTURE(p);
      CAPTURE(s);
      CHECK(std::abs(F_p_prime(p, s) - fd) < 1e-5);
    }
  }
  for (double s = 0.1; s < 0.95; s += 0.1) CHECK(F_p_prime(3.8, s) >= 0.0);
  CHECK(std::abs(F_p_prime(3.0, 1.0)) < 1e-9);
}

TEST_CASE("t0 root and H_{p,s}") {
  const auto t0 = t0_root(3.0, 0.5);
  REQUIRE(t0);
  CHECK(*t0 == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
  CHECK(std::abs(H_ps_eval(3.0, 0.5, *t0)) < 1e-12);
  CHECK(!t0_root(3.8, 0.5));
  CHECK(H_ps_eval(3.8, 0.5, 0.0) > 0.0);

  for (double s : {0.9, 0.99, 0.999999}) {
    const auto r = t0_root(3.0, s);
    REQUIRE(r);
    CHECK(*r <= s);
  }
  for (double p : {2.1, 2.5, 3.0, 3.5, 3.7}) {
    for (double s : {0.1, 0.5, 0.9}) {
      const auto r = t0_root(p, s);
      REQUIRE(r);
      CHECK(*r >= 0.0);
      CHECK(*r < s);
      CHECK(std::abs(H_ps_eval(p, s, *r)) < 1e-10 * std::pow(1.0 - *r, -2.0 / p));
    }
  }
  for (double p : {3.75, 3.9}) CHECK(!t0_root(p, 0.5));

  double prev = H_ps_eval(3.0, 0.5, 0.4);
  for (double d : {1e-2, 1e-4, 1e-8, 1e-12}) {
    const double v = H_ps_eval(3.0, 0.5, 0.5 - d);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 1e6);
  CHECK_THROWS_AS(H_ps_eval(3.0, 0.5, 0.5), DomainError);
}

TEST_CASE("grids") {
  const auto ax = Axis::stepped("s", 0.0, 1.0, 0.05);
  REQUIRE(ax.values.size() == 21);
  CHECK(ax.values.back() == 1.0);
  const auto lg = Axis::log("x", 1.01, 50.0, 200);
  CHECK(lg.values.front() == 1.01);
  CHECK(lg.values.back() == doctest::Approx(50.0).epsilon(1e-15));

  const GridSpec g{{Axis::linear("a", 0.0, 1.0, 3), Axis::linear("b", 10.0, 20.0, 2)}};
  CHECK(g.size() == 6);
  CHECK(g.point(1) == std::vector<double>{0.0, 20.0});
  CHECK(g.point(4) == std::vector<double>{1.0, 10.0});
}

TEST_CASE("default verification runs") {
  const auto bb = run_verification(LemmaId::beta_bound, default_grid(LemmaId::beta_bound));
  CHECK(bb.points == 200 * 99);
  CHECK(bb.passed);
  CHECK(bb.worst_margin > 0.0);

  const auto b2 = run_verification(LemmaId::beta_2p, default_grid(LemmaId::beta_2p));
  CHECK(b2.points == 199);
  CHECK(b2.passed);

  const auto fp = run_verification(LemmaId::Fp_nonpositive, default_grid(LemmaId::Fp_nonpositive));
  CHECK(fp.points == 37 * 21);
  CHECK(fp.passed);
  CHECK(fp.tolerance == 1e-8);

  for (const auto* r : {&bb, &b2, &fp}) {
    CHECK(r->passed == (r->worst_margin >= -r->tolerance && !r->error));
    double worst = r->rows.front().margin;
    for (const auto& row : r->rows) worst = std::min(worst, row.margin);
    CHECK(worst == r->worst_margin);
  }
}

TEST_CASE("verification is deterministic and reports failures") {
  const auto grid = default_grid(LemmaId::beta_2p);
  const auto a = run_verification(LemmaId::beta_2p, grid);
  const auto b = run_verification(LemmaId::beta_2p, grid);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.worst_point == b.worst_point);

  CHECK_THROWS_AS(run_verification(LemmaId::beta_2p, grid, -1.0), DomainError);

  // Points outside the lemma's domain fail the report instead of throwing.
  const GridSpec bad{{Axis::linear("p", 3.0, 4.5, 4)}};
  const auto r = run_verification(LemmaId::beta_2p, bad);
  CHECK(!r.passed);
  CHECK(r.error);

  CHECK(lemma_from_string("Fp_nonpositive") == LemmaId::Fp_nonpositive);
  CHECK_THROWS_AS(lemma_from_string("nope"), DomainError);
}
