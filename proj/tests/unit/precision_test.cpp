#include <gtest/gtest.h>

#include "generators.hpp"
#include "magagm/errors.hpp"
#include "magagm/qsqrt2.hpp"
#include "magagm/rational.hpp"
#include "magagm/special.hpp"

using namespace magagm;
using magagm::testing::close;
using magagm::testing::Gen;

TEST(BigReal, MixedPrecisionTakesTheWiderOperand) {
  BigReal a(1L, 64), b(3L, 256);
  EXPECT_EQ((a / b).precision(), 256);
  EXPECT_EQ((a + 1L).precision(), 64);
}

TEST(BigReal, DecimalRoundTrip) {
  PrecisionContext ctx(40);
  BigReal x = ctx.parse("1.2345678901234567890123456789");
  EXPECT_TRUE(close(ctx.parse(x.to_string(35)), x, 34));
  EXPECT_EQ(ctx.parse("2.5").round_to_integer(), 3);
  EXPECT_EQ(ctx.parse("-2.5").round_to_integer(), -3);
}

TEST(BigReal, ToRationalIsExact) {
  BigReal x(0.375, 53);
  EXPECT_EQ(x.to_rational(), ratio(3, 8));
}

TEST(PrecisionContext, PiAgreesWithMachin) {
  PrecisionContext ctx(80);
  // 16 atan(1/5) - 4 atan(1/239), with atan from atan2.
  BigReal one = ctx.real(1);
  BigReal machin = 16L * atan2(one, ctx.real(5)) - 4L * atan2(one, ctx.real(239));
  EXPECT_TRUE(close(ctx.pi(), machin, 80));
  EXPECT_TRUE(close(ctx.exp_minus_pi(), exp(-ctx.pi()), 80));
}

TEST(Agm, SymmetricAndHomogeneous) {
  PrecisionContext ctx(50);
  Gen g(11);
  for (int i = 0; i < 20; ++i) {
    BigReal a = g.real(0.01, 10, ctx), b = g.real(0.01, 10, ctx), t = g.real(0.1, 5, ctx);
    BigReal m = agm(a, b, ctx);
    EXPECT_TRUE(close(m, agm(b, a, ctx), 50));
    EXPECT_TRUE(close(agm(t * a, t * b, ctx), t * m, 50));
    EXPECT_TRUE(min(a, b) <= m && m <= max(a, b));
  }
}

TEST(Agm, RejectsNonPositiveOperands) {
  PrecisionContext ctx(20);
  EXPECT_THROW(agm(ctx.real(0), ctx.real(1), ctx), DomainError);
  EXPECT_THROW(agm(ctx.real(-1), ctx.real(1), ctx), DomainError);
}

TEST(Agm, MatchesHypergeometricSeries) {
  PrecisionContext ctx(40);
  Gen g(12);
  for (int i = 0; i < 10; ++i) {
    BigReal f = g.real(-0.3, 0.3, ctx);
    BigReal via_agm = 1L / agm(1L + f, 1L - f, ctx);
    EXPECT_TRUE(close(inverse_agm_series(f, 200, ctx), via_agm, 40));
  }
}

TEST(Special, GammaQuarterTwoRoutes) {
  PrecisionContext ctx(60);
  EXPECT_TRUE(close(gamma_quarter(ctx), gamma_rational(ratio(1, 4), ctx), 60));
  // Gamma(1/2)^2 = pi.
  BigReal g = gamma_rational(ratio(1, 2), ctx);
  EXPECT_TRUE(close(g * g, ctx.pi(), 60));
}

TEST(Special, EllipticI1ClosedForms) {
  PrecisionContext ctx(40);
  EXPECT_TRUE(close(elliptic_i1(ctx.real(1), ctx), ctx.pi() / 2L, 40));
  // I1(f) = I1(1/f)/f.
  BigReal f = ctx.parse("0.37");
  EXPECT_TRUE(close(elliptic_i1(f, ctx), elliptic_i1(1L / f, ctx) / f, 40));
}

TEST(Special, NomeAtSelfDualPoint) {
  PrecisionContext ctx(40);
  // f = sqrt 2 - 1 is fixed by f -> (1-f)/(1+f); the two AGMs differ by a
  // factor sqrt 2 there, so q = exp(-pi sqrt 2).
  BigReal q = nome_from_f(sqrt(ctx.real(2)) - 1L, ctx);
  EXPECT_TRUE(close(q, exp(-ctx.pi() * sqrt(ctx.real(2))), 38));
}

TEST(Rational, PochhammerFactorialBinomial) {
  for (long n = 0; n <= 20; ++n) {
    EXPECT_EQ(pochhammer(Rational(1), n), Rational(factorial(n)));
    for (long k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k) * factorial(k) * factorial(n - k), factorial(n));
  }
  EXPECT_EQ(half_pochhammer_ratio(3), ratio(5, 16));
  Gen g(3);
  for (int i = 0; i < 50; ++i) {
    Rational a = g.rational();
    long n = g.integer(0, 10);
    EXPECT_EQ(pochhammer(a, n + 1), pochhammer(a, n) * (a + n));
  }
}

TEST(Rational, BernoulliNumbers) {
  auto b = bernoulli_numbers(13);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], ratio(-1, 2));
  EXPECT_EQ(b[2], ratio(1, 6));
  EXPECT_EQ(b[4], ratio(-1, 30));
  EXPECT_EQ(b[12], ratio(-691, 2730));
  for (int n = 3; n < 13; n += 2) EXPECT_EQ(b[static_cast<std::size_t>(n)], 0);
}

TEST(Rational, ReconstructionRoundTrip) {
  PrecisionContext ctx(60);
  Gen g(5);
  for (int i = 0; i < 40; ++i) {
    Rational r = ratio(g.integer(-1000000, 1000000), g.integer(1, 1000000));
    auto back = reconstruct_rational(ctx.real(r), pow10(-50, ctx.bits()), 30);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, r);
  }
  // pi has no small rational within 1e-50.
  EXPECT_FALSE(reconstruct_rational(ctx.pi(), pow10(-50, ctx.bits()), 20).has_value());
}

TEST(Rational, SmoothFactorizationReassembles) {
  Gen g(8);
  for (int i = 0; i < 100; ++i) {
    Integer n = Integer(g.integer(1, 1000000)) * g.integer(1, 1000000);
    long bound = g.integer(2, 200);
    SmoothFactorization f = factor_smooth(n, bound);
    Integer prod = f.cofactor;
    for (const auto& p : f.factors) {
      EXPECT_LE(p.prime, bound);
      for (int e = 0; e < p.exponent; ++e) prod *= p.prime;
    }
    EXPECT_EQ(prod, n);
    for (long p : primes_up_to(bound)) EXPECT_NE(Integer(f.cofactor % p), 0);
  }
}

TEST(Rational, FactorSmallAndPrimes) {
  EXPECT_EQ(primes_up_to(30), (std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(factor_small(360), (std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(decimal_digits(Integer(99999)), 5);
}

TEST(Rational, Fnv1aReferenceVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(QSqrt2, FieldAxioms) {
  Gen g(21);
  for (int i = 0; i < 100; ++i) {
    QSqrt2 x(g.rational(), g.rational()), y(g.rational(), g.rational());
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ(x * y, y * x);
    if (!y.is_zero()) {
      EXPECT_EQ((x / y) * y, x);
    }
    EXPECT_EQ((x * x.conj()).b(), 0);
    EXPECT_EQ((x * x.conj()).a(), x.norm());
  }
}

TEST(QSqrt2, SignAndSqrtAgreeWithNumerics) {
  PrecisionContext ctx(30);
  Gen g(22);
  for (int i = 0; i < 100; ++i) {
    QSqrt2 x(g.rational(), g.rational());
    BigReal v = x.to_real(ctx);
    EXPECT_EQ(x.sign(), v.sign());
    auto r = try_sqrt(x * x);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, x.sign() < 0 ? -x : x);
  }
  EXPECT_FALSE(try_sqrt(QSqrt2::sqrt2()).has_value());
}

TEST(PiQuadratic, ArithmeticAndProducts) {
  PiQuadratic a(ratio(1, 2), ratio(3, 4)), b(ratio(-1, 3), ratio(1, 5));
  EXPECT_EQ((a + b).rational_part(), ratio(1, 6));
  EXPECT_EQ((a * ratio(2, 1)).pi2_part(), ratio(3, 2));
  EXPECT_THROW(a * b, DomainError);
  PrecisionContext ctx(30);
  EXPECT_TRUE(close(a.to_real(ctx), ctx.real(ratio(1, 2)) + ctx.pi() * ctx.pi() * ratio(3, 4), 30));
}
