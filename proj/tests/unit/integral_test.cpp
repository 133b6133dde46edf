#include <gtest/gtest.h>

#include "generators.hpp"
#include "magagm/errors.hpp"
#include "magagm/integral.hpp"
#include "magagm/rational.hpp"
#include "magagm/quadrature.hpp"
#include "magagm/special.hpp"

using namespace magagm;
using magagm::testing::close;
using magagm::testing::Gen;

TEST(ACoefficients, ExactAndNumericRecursionsAgree) {
  PrecisionContext ctx(40);
  auto exact = a_coeffs(60);
  auto numeric = a_coeffs_numeric(60, ctx);
  ASSERT_EQ(exact.size(), numeric.size());
  EXPECT_EQ(exact[0], 1);
  for (std::size_t n = 0; n < exact.size(); ++n) {
    EXPECT_TRUE(close(numeric[n], ctx.real(exact[n]), 38)) << n;
    EXPECT_LE(abs(numeric[n]), 1L) << n;
  }
}

TEST(ACoefficients, SatisfyTheirRecursion) {
  auto a = a_coeffs(30);
  for (long n = 1; n <= 30; ++n) {
    Rational prev2 = n >= 2 ? a[static_cast<std::size_t>(n - 2)] : Rational(0);
    Rational lhs = Rational((2 * n + 1) * (2 * n + 1) * (2 * n + 1)) * a[static_cast<std::size_t>(n)];
    Rational rhs = Rational(4 * n * (4 * n * n + 1)) * a[static_cast<std::size_t>(n - 1)] -
                   Rational((2 * n - 1) * (2 * n - 1) * (2 * n - 1)) * prev2 + Rational(8 * n * (n % 2 ? -1 : 1));
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(Reduction, LandsInFundamentalInterval) {
  PrecisionContext ctx(30);
  Gen g(31);
  BigReal edge = sqrt(ctx.real(2)) - 1L;
  for (int i = 0; i < 100; ++i) {
    BigReal f = g.real(-20, 20, ctx);
    if (abs(f + 1L) < pow10(-3, ctx.bits())) continue;
    ReductionTrace t = reduce_f(f, ctx);
    EXPECT_GE(t.final_f, 0L);
    EXPECT_LE(t.final_f, edge);
    EXPECT_LE(t.steps.size(), 4U);
  }
  EXPECT_THROW(reduce_f(ctx.real(-1), ctx), PoleError);
  EXPECT_THROW(i2_eval(ctx.real(-1), ctx), PoleError);
}

TEST(I2, DirectSeriesAgreesWithReducedEvaluation) {
  PrecisionContext ctx(40);
  Gen g(32);
  for (int i = 0; i < 25; ++i) {
    BigReal f = g.real(-0.95, 0.95, ctx);
    EXPECT_TRUE(close(i2_direct_series(f, ctx), i2_eval(f, ctx), 39)) << f.to_string(10);
  }
  EXPECT_THROW(i2_direct_series(ctx.real(1), ctx), DomainError);
  EXPECT_THROW(i2_reduced(ctx.parse("0.5"), ctx), DomainError);
}

TEST(I2, InvolutionOnUnreducedSeries) {
  PrecisionContext ctx(50);
  Gen g(33);
  for (int i = 0; i < 10; ++i) {
    BigReal f = g.real(0.05, 0.95, ctx);
    BigReal other = (1L - f) / (1L + f);
    EXPECT_TRUE(close(i2_direct_series(f, ctx), i2_direct_series(other, ctx), 45));
  }
}

TEST(I2, InverseMapFromQuadrature) {
  // I2(f) = I2(1/f)/f with the left side from the quadrature oracle.
  PrecisionContext ctx(25);
  for (const char* s : {"0.2", "0.6", "-0.3"}) {
    BigReal f = ctx.parse(s);
    EXPECT_TRUE(close(i2_eval(1L / f, ctx) / f, i2_quadrature(f, 22), 20)) << s;
  }
}

TEST(I2, NegativeArgumentRelation) {
  PrecisionContext ctx(40);
  Gen g(34);
  for (int i = 0; i < 10; ++i) {
    BigReal f = g.real(-0.9, -0.01, ctx);
    BigReal rhs = (1L + f) * (j_function(f, ctx) - i2_eval(-f, ctx) / (1L - f));
    EXPECT_TRUE(close(i2_eval(f, ctx), rhs, 38));
  }
}

TEST(I2, CheckedEvaluationAndQuadratureLimits) {
  PrecisionContext ctx(30);
  EXPECT_TRUE(close(i2_eval_checked(ctx.parse("3"), ctx), i2_eval(ctx.parse("3"), ctx), 30));
  EXPECT_THROW(i2_quadrature(ctx.parse("0.1"), 60), PrecisionError);
}

TEST(I2, ExactExpansionMatchesNumerics) {
  PrecisionContext ctx(40);
  auto s = i2_series(80);
  BigReal f = ctx.parse("0.125");
  BigReal sum = ctx.real(0), power = ctx.real(1);
  for (int n = 0; n <= s.order(); ++n) {
    sum += s[n].to_real(ctx) * power;
    power *= f;
  }
  EXPECT_TRUE(close(sum, i2_eval(f, ctx), 38));
  EXPECT_EQ(s[0], PiQuadratic::pi_squared(ratio(1, 8)));
}

TEST(I2, TCoefficientsRecursion) {
  auto t = t_coeffs(30);
  EXPECT_EQ(t[0], 0);
  for (long n = 0; n < 30; ++n)
    EXPECT_EQ(2 * t[static_cast<std::size_t>(n + 1)] - t[static_cast<std::size_t>(n)], half_pochhammer_ratio(n));
}

TEST(I2, OperatorIdentities) {
  EXPECT_TRUE(verify_theorem1(30).zero());
  SeriesResidual r = verify_theorem2(30);
  EXPECT_TRUE(r.zero());
  EXPECT_TRUE(r.pi2_part_zero && r.rational_part_zero);
}

TEST(I2, OperatorIdentityDetectsCorruption) {
  // A perturbed input must leave a nonzero residual.
  auto s = i2_series(20);
  s[5] += PiQuadratic(ratio(1, 1000));
  auto lhs = apply_L(s);
  auto rhs = theorem1_rhs(lhs.order());
  bool differs = false;
  for (int n = 0; n <= 15; ++n) differs = differs || !(lhs[n] == PiQuadratic(rhs[n]));
  EXPECT_TRUE(differs);
}

TEST(Quadrature, PolynomialAndEndpointSingularity) {
  PrecisionContext ctx(40);
  TanhSinh ts(ctx);
  auto cube = [](const BigReal& x, const BigReal&, const BigReal&) { return x * x * x; };
  auto r = ts.integrate(cube, ctx.real(0), ctx.real(2), pow10(-35, ctx.bits()));
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(close(r.value, ctx.real(4), 35));
  // integral_0^1 dx / sqrt(x(1-x)) = pi, using the endpoint distances.
  auto arc = [](const BigReal&, const BigReal& da, const BigReal& db) { return 1L / sqrt(da * db); };
  auto s = ts.integrate(arc, ctx.real(0), ctx.real(1), pow10(-35, ctx.bits()));
  EXPECT_TRUE(close(s.value, ctx.pi(), 33));
  auto decay = [](const BigReal& x) { return 1L / (x * x + 1L); };
  auto t = ts.integrate_to_infinity(decay, ctx.real(0), pow10(-30, ctx.bits()));
  EXPECT_TRUE(close(t.value, ctx.pi() / 2L, 28));
}
