#include "trigzero/trigpoly.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "trigzero/errors.hpp"

using namespace trigzero;
using tztest::random_mean_zero;

namespace {

void check_same(const TrigPoly& p, const TrigPoly& q, double tol) {
  REQUIRE(p.term_count() == q.term_count());
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    const auto& hp = p.harmonics()[i];
    const auto& hq = q.harmonics()[i];
    CHECK(hp.k == hq.k);
    CHECK(std::abs(hp.a - hq.a) <= tol);
    CHECK(std::abs(hp.b - hq.b) <= tol);
  }
}

}  // namespace

TEST_CASE("canonical form: sorted, merged, zero pairs dropped") {
  const TrigPoly p =
      TrigPoly::from_harmonics({{5, 0.0, 0.1}, {2, 0.5, 0.0}, {2, 0.25, 1.0}});
  REQUIRE(p.term_count() == 2);
  CHECK(p.harmonics()[0].k == 2);
  CHECK(p.harmonics()[0].a == 0.75);
  CHECK(p.harmonics()[0].b == 1.0);
  CHECK(p.harmonics()[1].k == 5);
  CHECK(p.degree() == 5);

  CHECK(TrigPoly::from_harmonics({{3, 0.0, 0.0}}).is_zero());
  CHECK(TrigPoly::from_harmonics({{1, 1.0, 0.0}, {1, -1.0, 0.0}}).is_zero());
  CHECK(TrigPoly().degree() == 0);

  CHECK_THROWS_AS(TrigPoly::from_harmonics({{-1, 1.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TrigPoly::from_harmonics({{0, 1.0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TrigPoly::from_harmonics({{1, 1.0 / 0.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("coeff lookup and mean") {
  const TrigPoly p = TrigPoly::from_harmonics({{0, 2.0, 0.0}, {3, 1.0, -4.0}});
  CHECK(p.mean() == 2.0);
  CHECK(p.coeff(3) == std::pair{1.0, -4.0});
  CHECK(p.coeff(1) == std::pair{0.0, 0.0});
  CHECK(TrigPoly().mean() == 0.0);
}

TEST_CASE("reduce_angle lands in [0, 2*pi)") {
  CHECK(reduce_angle(0.0) == 0.0);
  CHECK(reduce_angle(kTwoPi) == 0.0);
  CHECK(reduce_angle(-1.0) == doctest::Approx(kTwoPi - 1.0).epsilon(1e-15));
  CHECK(reduce_angle(7.0) == doctest::Approx(7.0 - kTwoPi).epsilon(1e-15));
  for (double x : {-1e6, -12.3, 0.5, 9e5}) {
    const double r = reduce_angle(x);
    CHECK(r >= 0.0);
    CHECK(r < kTwoPi);
  }
}

TEST_CASE("eval on the spec'd points") {
  CHECK(TrigPoly::harmonic(1, 0.0, 1.0).eval(kPi / 2) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(TrigPoly().eval(3.7) == 0.0);
  // cos(0) = 1, sin(0) = 0 are exact in the rotation recurrence.
  CHECK(TrigPoly::from_harmonics({{2, 0.5, 0.0}, {5, 0.0, 0.1}}).eval(0.0) ==
        0.5);
}

TEST_CASE("eval matches direct libm summation") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> ux(-50.0, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 32);
    const double x = ux(rng);
    double direct = 0.0;
    for (const auto& h : p.harmonics())
      direct += h.a * std::cos(h.k * x) + h.b * std::sin(h.k * x);
    CHECK(std::abs(p.eval(x) - direct) <= 1e-12 * coefficient_sum(p));
  }
}

TEST_CASE("derivative on the spec'd polynomials") {
  check_same(TrigPoly::harmonic(1, 0.0, 1.0).derivative(),
             TrigPoly::harmonic(1, 1.0, 0.0), 0.0);
  CHECK(TrigPoly::constant(2.0).derivative().is_zero());
  check_same(TrigPoly::harmonic(3, 1.0, 0.0).derivative(),
             TrigPoly::harmonic(3, 0.0, -3.0), 0.0);
}

TEST_CASE("antiderivative on the spec'd polynomials") {
  check_same(TrigPoly::harmonic(1, 1.0, 0.0).antiderivative(),
             TrigPoly::harmonic(1, 0.0, 1.0), 0.0);
  check_same(TrigPoly::harmonic(2, 0.0, 4.0).antiderivative(),
             TrigPoly::harmonic(2, -2.0, 0.0), 0.0);
  CHECK_THROWS_AS(TrigPoly::constant(1.0).antiderivative(), MeanNotZero);
}

TEST_CASE("iterated antiderivative rotates and contracts") {
  // Four applications divide by k^4 with no phase change.
  check_same(TrigPoly::harmonic(2, 1.0, 0.0).antiderivative(4),
             TrigPoly::harmonic(2, 1.0 / 16.0, 0.0), 0.0);
  // One application is the plain antiderivative.
  std::mt19937_64 rng(102);
  const TrigPoly p = random_mean_zero(rng, 12);
  check_same(p.antiderivative(1), p.antiderivative(), 0.0);
  // Two applications of cos give -cos.
  check_same(TrigPoly::harmonic(1, 1.0, 0.0).antiderivative(2),
             TrigPoly::harmonic(1, -1.0, 0.0), 0.0);
  CHECK_THROWS_AS(TrigPoly::constant(1.0).antiderivative(3), MeanNotZero);
}

TEST_CASE("calculus roundtrip: derivative of antiderivative is identity") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 32);
    check_same(p.antiderivative().derivative(), p, 1e-13);
  }
}

TEST_CASE("iteration consistency: the ell overload is the literal loop") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 16);
    TrigPoly manual = p;
    for (int i = 0; i < 7; ++i) manual = manual.antiderivative();
    check_same(p.antiderivative(7), manual, 0.0);
  }
}

TEST_CASE("antiderivative agrees with quadrature") {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> ux(0.1, kTwoPi);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 8);
    const TrigPoly P = p.antiderivative();
    const double x = ux(rng);
    // Composite Simpson, plenty fine for degree 8.
    const int segments = 1 << 12;
    const double h = x / (2 * segments);
    double integral = p.eval(0.0) + p.eval(x);
    for (int i = 1; i < 2 * segments; ++i)
      integral += p.eval(i * h) * (i % 2 ? 4.0 : 2.0);
    integral *= h / 3.0;
    CHECK(std::abs((P.eval(x) - P.eval(0.0)) - integral) <= 1e-8);
  }
}

TEST_CASE("linearity and periodicity of eval") {
  std::mt19937_64 rng(106);
  std::uniform_real_distribution<double> ux(-100.0, 100.0);
  for (int trial = 0; trial < 50; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 24);
    const TrigPoly q = random_mean_zero(rng, 17);
    const double x = ux(rng);
    // Tolerances are relative to the coefficient scale; pointwise-relative
    // comparison is meaningless near a zero of the sum.
    const double scale = coefficient_sum(p) + coefficient_sum(q);
    CHECK(std::abs((p + q).eval(x) - (p.eval(x) + q.eval(x))) <=
          1e-12 * scale);
    CHECK(std::abs(p.eval(x) - p.eval(x + kTwoPi)) <= 1e-10 * scale);
  }
}

TEST_CASE("operators: addition, subtraction, scaling, negation") {
  std::mt19937_64 rng(107);
  const TrigPoly p = random_mean_zero(rng, 10);
  const TrigPoly q = random_mean_zero(rng, 6);
  check_same((p + q) - q, p, 1e-15);
  check_same(2.0 * p - p, p, 1e-15);
  check_same(p * 0.5 + p * 0.5, p, 1e-15);
  CHECK((p + (-p)).is_zero());
  CHECK((0.0 * p).is_zero());
}

TEST_CASE("translate rotates coefficients, evaluation shifts") {
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> us(0.0, kTwoPi);
  std::uniform_real_distribution<double> ux(-10.0, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 16);
    const double s = us(rng), x = ux(rng);
    const TrigPoly pt = translate(p, s);
    CHECK(std::abs(pt.eval(x) - p.eval(x + s)) <= 1e-12 * coefficient_sum(p));
  }
  // Composition of shifts.
  const TrigPoly p = random_mean_zero(rng, 8);
  check_same(translate(translate(p, 0.7), 1.1), translate(p, 1.8), 1e-13);
  // Constants are unaffected.
  check_same(translate(TrigPoly::constant(3.0), 1.0), TrigPoly::constant(3.0),
             0.0);
}

TEST_CASE("leading_harmonic on the spec'd polynomials") {
  const auto lh =
      leading_harmonic(TrigPoly::from_harmonics({{2, 0.5, 0.0}, {5, 0.0, 0.1}}));
  REQUIRE(lh.has_value());
  CHECK(lh->n == 2);
  CHECK(lh->rho == 0.5);
  CHECK(lh->phi == 0.0);

  CHECK(!leading_harmonic(TrigPoly()).has_value());
  CHECK(!leading_harmonic(TrigPoly::constant(4.0)).has_value());

  const auto lh2 = leading_harmonic(TrigPoly::harmonic(3, 3.0, 4.0));
  REQUIRE(lh2.has_value());
  CHECK(lh2->n == 3);
  CHECK(lh2->rho == 5.0);
  CHECK(lh2->phi == doctest::Approx(std::atan2(4.0, 3.0)).epsilon(1e-15));
}

TEST_CASE("leading_harmonic threshold is relative to the largest amplitude") {
  // The order-1 amplitude is far below threshold relative to order 2.
  const TrigPoly p =
      TrigPoly::from_harmonics({{1, 1e-12, 0.0}, {2, 1.0, 0.0}});
  const auto lh = leading_harmonic(p, 1e-9);
  REQUIRE(lh.has_value());
  CHECK(lh->n == 2);
  // With a tighter tolerance the tiny order-1 term counts.
  const auto lh0 = leading_harmonic(p, 0.0);
  REQUIRE(lh0.has_value());
  CHECK(lh0->n == 1);
}

TEST_CASE("leading_harmonic invariants: rho consistency, phi branch") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 12);
    const auto lh = leading_harmonic(p);
    REQUIRE(lh.has_value());
    CHECK(lh->rho > 0.0);
    CHECK(std::abs(lh->rho * lh->rho - (lh->a * lh->a + lh->b * lh->b)) <=
          1e-14 * lh->rho * lh->rho);
    CHECK(lh->phi > -kPi);
    CHECK(lh->phi <= kPi);
    CHECK(std::abs(lh->rho * std::cos(lh->phi) - lh->a) <= 1e-14 * lh->rho);
    CHECK(std::abs(lh->rho * std::sin(lh->phi) - lh->b) <= 1e-14 * lh->rho);
  }
  // The branch cut maps (-rho, 0) to phi = +pi, never -pi.
  const auto cut = leading_harmonic(TrigPoly::harmonic(1, -2.0, 0.0));
  REQUIRE(cut.has_value());
  CHECK(cut->phi == kPi);
}

TEST_CASE("sup_norm on the spec'd polynomials") {
  CHECK(sup_norm(TrigPoly::harmonic(1, 0.0, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sup_norm(TrigPoly()) == 0.0);
  // Dense-scan value of the true sup is 1.0812606148...; the estimate must
  // cover it without passing the amplitude-sum ceiling.
  const TrigPoly p = TrigPoly::from_harmonics({{2, 0.0, 1.0}, {5, 0.0, 0.1}});
  const double v = sup_norm(p);
  CHECK(v >= 1.0812606148);
  CHECK(v <= 1.1);
  CHECK_THROWS_AS(sup_norm(p, 4), std::invalid_argument);
}

TEST_CASE("sup_norm sandwich: grid max <= estimate <= amplitude sum") {
  std::mt19937_64 rng(110);
  for (int trial = 0; trial < 30; ++trial) {
    const TrigPoly p = random_mean_zero(rng, 20);
    const double v = sup_norm(p);
    const int grid = 64 * std::max(p.degree(), 1);
    double gm = 0.0;
    for (int i = 0; i < grid; ++i)
      gm = std::max(gm, std::abs(p.eval(kTwoPi * i / grid)));
    CHECK(v >= gm);
    CHECK(v <= coefficient_sum(p));
  }
}
