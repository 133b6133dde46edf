#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "magagm/laurent.hpp"
#include "magagm/modular.hpp"
#include "magagm/special.hpp"

using namespace magagm;
using magagm::testing::close;

namespace {

const LaurentResult& shared_result() {
  static const LaurentResult r = phi_laurent(laurent_order_for(20));
  return r;
}

}  // namespace

TEST(Laurent, OrderBookkeeping) {
  EXPECT_EQ(laurent_order_for(8), 36);
  EXPECT_THROW(phi_laurent(7), DomainError);
  EXPECT_THROW(phi_laurent(6), DomainError);
}

TEST(Laurent, FirstCoefficients) {
  LaurentResult r = phi_laurent(laurent_order_for(8));
  ASSERT_GE(r.c.size(), 8U);
  EXPECT_EQ(r.c[0], ratio(7, 15));
  EXPECT_EQ(r.c[1], ratio(57, 175));
  EXPECT_EQ(r.c[2], Rational("47953/482625"));
  EXPECT_EQ(r.c[7], Rational("7162997611208195563/144310550800696358203125"));
  EXPECT_GE(r.achieved_order, laurent_order_for(8));
}

TEST(Laurent, StableUnderDoubledPrecision) {
  LaurentResult low = phi_laurent(laurent_order_for(10), 160);
  LaurentResult high = phi_laurent(laurent_order_for(10), 320);
  ASSERT_EQ(low.c.size(), high.c.size());
  for (std::size_t i = 0; i < low.c.size(); ++i) EXPECT_EQ(low.c[i], high.c[i]) << i + 1;
}

TEST(Laurent, ExpansionHasOnlyMultiplesOfFourInZ) {
  const LaurentResult& r = shared_result();
  EXPECT_LT(r.off_pattern_log10, -0.5 * r.digits);
  EXPECT_LT(r.leading_log10, -0.5 * r.digits);
}

TEST(Laurent, DFromGammaQuarter) {
  PrecisionContext ctx(50);
  // agm(1, sqrt 2) = (2 pi)^{3/2} / Gamma(1/4)^2.
  BigReal g = gamma_rational(ratio(1, 4), ctx);
  BigReal m = pow(2L * ctx.pi(), ctx.real(3) / 2L) / (g * g);
  BigReal d = pow(ctx.pi(), 4) / (4L * pow(m, 8));
  EXPECT_TRUE(close(laurent_d(ctx), d, 48));
  EXPECT_TRUE(close(shared_result().D.with_precision(ctx.bits()), d, 48));
}

TEST(Laurent, ExpansionReproducesPointwisePhi) {
  // tau = t+ + i eps, so tau - t+ = i eps, tau - t- = i (1 + eps), z = eps/(1+eps).
  PrecisionContext ctx(30);
  const LaurentResult& r = shared_result();
  BigReal eps = ctx.parse("0.05");
  BigComplex tau = ctx.complex(ctx.real(ratio(1, 2)), ctx.real(ratio(1, 2)) + eps);
  BigReal z = eps / (1L + eps);
  BigReal x = -4L * r.D.with_precision(ctx.bits()) * pow(z, 4);
  BigReal sum = ctx.real(0), xn = ctx.real(1);
  for (const Rational& c : r.c) {
    xn *= x;
    sum += xn * c;
  }
  BigReal amplitude = 1L / (8L * ctx.pi() * ctx.pi() * eps * eps * (1L + eps) * (1L + eps));
  // -i / ((i eps)^2 (i (1+eps))^2) = -i / (eps^2 (1+eps)^2).
  BigComplex expect(ctx.real(0), -amplitude * (1L - 2L * sum));
  BigComplex got = phi_eval(tau, ctx);
  EXPECT_LT(abs(got - expect) / abs(expect), pow10(-25, ctx.bits()));
}

TEST(Laurent, ArithmeticProperties) {
  CnPropertyReport p = cn_properties(shared_result(), 20);
  EXPECT_TRUE(p.passed);
  ASSERT_EQ(p.rows.size(), 20U);
  for (const auto& row : p.rows) EXPECT_TRUE(row.a && row.b && row.c) << row.n << " " << row.detail;
  auto j = nlohmann::json::parse(cn_properties_json(p));
  EXPECT_FALSE(j.empty());
}

TEST(Laurent, PropertiesRejectCorruptedCoefficient) {
  LaurentResult r = shared_result();
  r.c[4] = r.c[4] * ratio(2, 1);
  CnPropertyReport p = cn_properties(r, 20);
  EXPECT_FALSE(p.passed);
  EXPECT_FALSE(p.rows[4].a);
}

TEST(Laurent, AsymptoticEnvelope) {
  CnAsymptoticReport a = cn_asymptotic_check(shared_result(), 10);
  EXPECT_TRUE(a.passed);
  EXPECT_LE(a.max_envelope, 10.0);
  EXPECT_EQ(a.rows.size(), 20U);
}

TEST(Laurent, SumRuleWithAndWithoutTail) {
  const LaurentResult& r = shared_result();
  SumRuleReport with_tail = sum_rule_check(r, 20, 20, true);
  SumRuleReport bare = sum_rule_check(r, 20, 20, false);
  EXPECT_TRUE(with_tail.passed);
  EXPECT_LT(with_tail.log10_deviation, bare.log10_deviation);
}

TEST(Laurent, JsonExport) {
  auto j = nlohmann::json::parse(laurent_json(shared_result()));
  ASSERT_TRUE(j.contains("c"));
  EXPECT_EQ(j["c"].size(), 20U);
  EXPECT_EQ(j["c"][0]["n"], 1);
  EXPECT_EQ(j["c"][0]["numerator"].get<std::string>(), "7");
  EXPECT_EQ(j["c"][0]["denominator"].get<std::string>(), "15");
  EXPECT_TRUE(j.contains("D"));
}
