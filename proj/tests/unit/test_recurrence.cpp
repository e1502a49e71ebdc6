#include <random>

#include <gtest/gtest.h>

#include "rectree/errors.hpp"
#include "rectree/recurrence.hpp"

using rectree::Integer;
using rectree::ParamPoint;
using rectree::Rational;
using rectree::StepPolynomial;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

StepPolynomial step(const rectree::Recurrence& r, std::vector<Rational> w) {
  return rectree::step_polynomial(r, w);
}

std::vector<Rational> roots_of(const StepPolynomial& p) {
  return rectree::solve_quadratic(p.p2, p.p1, p.p0).roots;
}

}  // namespace

TEST(FirstOrder, WorkedExampleCoefficients) {
  const auto r = rectree::make_first_order(1, 5, 8, 1);
  EXPECT_EQ(r.order(), 1u);
  EXPECT_EQ(r.degree(), 2u);
  EXPECT_EQ(rectree::family_name(r.family()), "first-order");
  // a(n-1)^2 a(n)^2 + (1 + 5 a(n-1)) a(n) + (8 + a(n-1)) at a(n-1) = 1
  EXPECT_EQ(step(r, {q(1)}), (StepPolynomial{q(1), q(6), q(9)}));
  EXPECT_EQ(step(r, {q(-3)}), (StepPolynomial{q(9), q(-14), q(5)}));
}

TEST(FirstOrder, ZeroCoefficientsAndDirectSubstitution) {
  const auto zero = rectree::make_first_order(0, 0, 0, 0);
  EXPECT_EQ(step(zero, {q(3)}), (StepPolynomial{q(9), q(0), q(0)}));
  const auto r = rectree::make_first_order(1, -4, 2, 1);
  EXPECT_EQ(step(r, {q(1)}), (StepPolynomial{q(1), q(-3), q(3)}));
}

TEST(SomosRatio, Coefficients) {
  const auto r = rectree::make_somos_ratio_quadratic({1, 1});
  EXPECT_EQ(step(r, {q(1)}), (StepPolynomial{q(1), q(-3), q(2)}));
  EXPECT_EQ(roots_of(step(r, {q(1)})), (std::vector<Rational>{q(1), q(2)}));
  EXPECT_EQ(step(r, {q(2)}), (StepPolynomial{q(4), q(-7), q(3)}));

  const auto r23 = rectree::make_somos_ratio_quadratic({2, 3});
  EXPECT_EQ(step(r23, {q(1)}), (StepPolynomial{q(1), q(-6), q(5)}));
  EXPECT_EQ(roots_of(step(r23, {q(1)})), (std::vector<Rational>{q(1), q(5)}));
}

TEST(Order3, Coefficients) {
  const auto r = rectree::make_order3_unfolding({1, 1});
  EXPECT_EQ(r.order(), 3u);
  EXPECT_EQ(step(r, {q(1), q(1), q(1)}), (StepPolynomial{q(1), q(-3), q(2)}));
  EXPECT_EQ(roots_of(step(r, {q(1), q(1), q(1)})), (std::vector<Rational>{q(1), q(2)}));
  EXPECT_EQ(step(r, {q(1), q(1), q(2)}), (StepPolynomial{q(1), q(-7), q(12)}));
  EXPECT_EQ(roots_of(step(r, {q(1), q(1), q(2)})), (std::vector<Rational>{q(3), q(4)}));

  const auto r00 = rectree::make_order3_unfolding({0, 0});
  EXPECT_EQ(step(r00, {q(1), q(1), q(1)}), (StepPolynomial{q(1), q(-1), q(0)}));
  EXPECT_EQ(roots_of(step(r00, {q(1), q(1), q(1)})), (std::vector<Rational>{q(0), q(1)}));
}

TEST(Order3, RootsMatchBaseCaseAtGeneralC) {
  for (long c1 = 1; c1 <= 4; ++c1) {
    for (long c2 = 1; c2 <= 4; ++c2) {
      const auto r = rectree::make_order3_unfolding({c1, c2});
      const long sum = c1 + c2;
      EXPECT_EQ(roots_of(step(r, {q(1), q(1), q(1)})),
                (std::vector<Rational>{q(std::min(1L, sum)), q(std::max(1L, sum))}));
      const auto s6 = roots_of(step(r, {q(1), q(1), q(sum)}));
      const Rational a = q(c1 * c1 + c1 * c2 + c2);
      const Rational b = q(sum * sum);
      if (a == b) {
        EXPECT_EQ(s6, (std::vector<Rational>{a}));
      } else {
        EXPECT_EQ(s6, (std::vector<Rational>{std::min(a, b), std::max(a, b)}));
      }
    }
  }
}

TEST(Recurrence, BadWindowAndUnsupported) {
  const auto r = rectree::make_order3_unfolding({1, 1});
  EXPECT_THROW(step(r, {q(1)}), rectree::BadWindow);
  const auto m1 = rectree::make_explicit_m1(rectree::family::ExplicitKind::Somos4, {1, 1});
  EXPECT_EQ(m1.degree(), 1u);
  EXPECT_THROW(step(m1, {q(1), q(1), q(1), q(1)}), rectree::Unsupported);

  const auto cubic = rectree::make_custom("cubic", 1, 3, [](std::span<const Rational> w) {
    return std::vector<Rational>{w[0], Rational(0), Rational(0), Rational(-1)};
  });
  EXPECT_EQ(cubic.degree(), 3u);
  EXPECT_EQ(cubic.coefficients(std::vector<Rational>{q(2)}).size(), 4u);
  EXPECT_THROW(step(cubic, {q(2)}), rectree::Unsupported);
}

TEST(Recurrence, ExplicitM1CoefficientsEncodeTheSequences) {
  // s(5) = (c1 s(4) s(2) + c2 s(3)^2) / s(1) => root of P1 x + P0.
  const auto m1 = rectree::make_explicit_m1(rectree::family::ExplicitKind::Somos4, {2, 3});
  auto c = m1.coefficients(std::vector<Rational>{q(1), q(1), q(1), q(1)});
  EXPECT_EQ(-c[1] / c[0], q(5));
  const auto rr = rectree::make_explicit_m1(rectree::family::ExplicitKind::RatioOfRatios, {2, 3});
  c = rr.coefficients(std::vector<Rational>{q(1), q(5)});
  EXPECT_EQ(-c[1] / c[0], q(13, 25));
}

// make_somos_ratio_quadratic(c) coincides with the first-order family at
// A1 = B2 = c1, A2 = -(2c1+c2+1), B1 = c2.
TEST(Recurrence, SomosRatioIsAFirstOrderInstance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> cd(-6, 6), vd(-40, 40);
  for (int i = 0; i < 400; ++i) {
    const ParamPoint c{cd(rng), cd(rng)};
    const auto a = rectree::make_somos_ratio_quadratic(c);
    const auto b = rectree::make_first_order(c.c1, -(2 * c.c1 + c.c2 + 1), c.c2, c.c1);
    long den = vd(rng);
    if (den == 0) den = 1;
    const std::vector<Rational> w{q(vd(rng), den)};
    EXPECT_EQ(rectree::step_polynomial(a, w), rectree::step_polynomial(b, w));
  }
}

// With A1 = B2, if y1 is a root at window (y0) then y0 is a root at window (y1).
TEST(Recurrence, SymmetricFamilyBacktracks) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> kd(-5, 5), vd(-9, 9);
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    const long A1 = kd(rng), A2 = kd(rng), B1 = kd(rng);
    const auto r = rectree::make_first_order(A1, A2, B1, A1);
    long den = vd(rng);
    if (den == 0) den = 2;
    const Rational y0 = q(vd(rng), den);
    if (y0.is_zero()) continue;
    const auto p0 = rectree::step_polynomial(r, std::vector<Rational>{y0});
    const auto children = rectree::solve_quadratic(p0.p2, p0.p1, p0.p0);
    for (const auto& y1 : children.roots) {
      if (y1.is_zero()) continue;
      const auto p = rectree::step_polynomial(r, std::vector<Rational>{y1});
      EXPECT_TRUE(rectree::eval_quadratic(p.p2, p.p1, p.p0, y0).is_zero());
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Recurrence, StepIsPure) {
  const auto r = rectree::make_order3_unfolding({3, -2});
  const std::vector<Rational> w{q(2, 3), q(-5), q(7, 11)};
  EXPECT_EQ(rectree::step_polynomial(r, w), rectree::step_polynomial(r, w));
}
