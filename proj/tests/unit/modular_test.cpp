#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "magagm/eisenstein.hpp"
#include "magagm/modular.hpp"

using namespace magagm;
using magagm::testing::close;
using magagm::testing::Gen;

namespace {

// prod_{k>=1} (1 - q^{level k}) by repeated multiplication.
Series<Integer> naive_eta_product(int level, int n) {
  Series<Integer> p = Series<Integer>::one(n);
  for (int k = 1; level * k <= n; ++k) {
    Series<Integer> factor = Series<Integer>::one(n);
    factor[static_cast<std::size_t>(level * k)] = -1;
    p = multiply_schoolbook(p, factor);
  }
  return p;
}

Integer sigma(long n, int power) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer t = 1;
      for (int i = 0; i < power; ++i) t *= d;
      s += t;
    }
  return s;
}

Series<Rational> to_rational(const Series<Integer>& s) { return convert<Rational>(s); }

EisensteinPoly random_poly(Gen& g, int weight) {
  EisensteinPoly p;
  for (int i = 0; 2 * i <= weight; ++i)
    for (int j = 0; 2 * i + 4 * j <= weight; ++j) {
      int rest = weight - 2 * i - 4 * j;
      if (rest % 6 != 0) continue;
      EisensteinPoly mono = EisensteinPoly::constant(g.rational());
      for (int a = 0; a < i; ++a) mono = mono * EisensteinPoly::L();
      for (int b = 0; b < j; ++b) mono = mono * EisensteinPoly::M();
      for (int c = 0; c < rest / 6; ++c) mono = mono * EisensteinPoly::N();
      p += mono;
    }
  return p;
}

}  // namespace

TEST(Eta, MatchesDirectProduct) {
  for (int level : {1, 2, 4}) {
    Series<Integer> e = eta_qexp(level, 60);
    EXPECT_EQ(e.prefactor(), ratio(level, 24));
    EXPECT_EQ(e.with_prefactor(0), naive_eta_product(level, 60)) << level;
  }
}

TEST(Eta, PsiFromDirectProducts) {
  const int n = 40;
  auto ratio_series = multiply_schoolbook(to_rational(naive_eta_product(2, n)), reciprocal(to_rational(naive_eta_product(1, n))));
  Series<Rational> expect = power(ratio_series, 24).scaled(Rational(64));
  // psi starts at q^1; the shift is carried in the coefficients.
  Series<Integer> psi = psi_qexp(n);
  EXPECT_EQ(psi[0], 0);
  EXPECT_EQ(to_rational(psi), expect.shifted(1).truncated(n));
  EXPECT_NO_THROW(f_squared_qexp(n));
}

TEST(Eta, PointwiseMatchesQuotient) {
  PrecisionContext ctx(30);
  BigComplex tau = ctx.complex(ctx.parse("0.1"), ctx.parse("0.9"));
  EtaQuotient q{{{1, 2}, {2, -1}}};
  BigComplex direct = pow(eta_eval(1, tau, ctx), 2) / eta_eval(2, tau, ctx);
  BigComplex v = q.eval(tau, ctx);
  EXPECT_LT(abs(v - direct) / abs(direct), pow10(-28, ctx.bits()));
  EXPECT_EQ(q.prefactor(), 0);
}

TEST(Fourier, LeadingCoefficientsAndExports) {
  FourierTable t = phi_qexp(40);
  std::vector<long> expect = {1, -44, 1126, -27096, 640909};
  for (std::size_t n = 0; n < expect.size(); ++n) EXPECT_EQ(t.A[n], expect[n]);
  EXPECT_TRUE(t.integral());
  EXPECT_EQ(fourier_table_checksum(t), fourier_table_checksum(phi_qexp(40)));
  auto j = nlohmann::json::parse(fourier_table_json(t));
  EXPECT_TRUE(j.is_object() || j.is_array());
  EXPECT_NE(fourier_table_csv(t).find("-44"), std::string::npos);
}

TEST(Fourier, AlternatingSigns) {
  FourierTable t = phi_qexp(200);
  for (std::size_t n = 0; n < t.A.size(); ++n) EXPECT_EQ(sgn(t.A[n]), n % 2 ? -1 : 1) << n;
}

TEST(Phi, TransformationsAtRandomPoints) {
  PrecisionContext ctx(40);
  Gen g(41);
  for (int i = 0; i < 5; ++i) {
    BigComplex tau = ctx.complex(g.real(-0.5, 0.5, ctx), g.real(0.6, 1.4, ctx));
    EXPECT_TRUE(verify_lemma2(tau, ctx).passed);
  }
}

TEST(Phi, ZeroAtCmPoint) {
  PrecisionContext ctx(40);
  BigComplex tau = ctx.complex(ctx.real(0), 1L / sqrt(ctx.real(2)));
  BigComplex scale = pow(eta_eval(1, tau, ctx) * eta_eval(2, tau, ctx), 4);
  EXPECT_LT(abs(phi_eval(tau, ctx)), abs(scale) * pow10(-38, ctx.bits()));
}

TEST(Phi, PoleIsReported) {
  PrecisionContext ctx(30);
  BigComplex pole = ctx.complex(ctx.real(ratio(1, 2)), ctx.real(ratio(1, 2)));
  EXPECT_THROW(phi_eval(pole, ctx), PoleError);
}

TEST(Cm, TableIsSelfConsistent) {
  PrecisionContext ctx(40);
  auto table = cm_table();
  EXPECT_EQ(table.size(), 7U);
  for (const auto& rec : table) {
    EXPECT_EQ(rec.R, (rec.psi - QSqrt2(1L)) / (rec.psi + QSqrt2(1L))) << rec.k;
    if (rec.f) {
      EXPECT_EQ(r_of_f(*rec.f), rec.R) << rec.k;
    }
    BigComplex num = psi_eval(rec.tau(ctx), ctx);
    BigReal expect = rec.psi.to_real(ctx);
    EXPECT_LT(abs(num - BigComplex(expect)) / abs(expect), pow10(-38, ctx.bits())) << rec.k;
  }
}

TEST(Cm, JInvariantAtI) {
  EXPECT_EQ(j_invariant(ratio(1, 8)), 1728);
  EXPECT_THROW(j_invariant(Rational(0)), PoleError);
}

TEST(Eisenstein, QExpansionsFromDivisorSums) {
  auto l = eisenstein_qexp(Eisenstein::L, 30), m = eisenstein_qexp(Eisenstein::M, 30),
       n = eisenstein_qexp(Eisenstein::N, 30);
  EXPECT_EQ(l[0], 1);
  for (long k = 1; k <= 30; ++k) {
    EXPECT_EQ(l[k], -24 * sigma(k, 1));
    EXPECT_EQ(m[k], 240 * sigma(k, 3));
    EXPECT_EQ(n[k], -504 * sigma(k, 5));
  }
}

TEST(Eisenstein, RamanujanSystemOnQSeries) {
  const int order = 50;
  for (auto p : {EisensteinPoly::L(), EisensteinPoly::M(), EisensteinPoly::N()})
    EXPECT_EQ(evaluate_qexp(ramanujan_derive(p), order), theta_apply(evaluate_qexp(p, order), 1));
  Gen g(42);
  for (int weight : {4, 6, 8, 12}) {
    EisensteinPoly p = random_poly(g, weight);
    EXPECT_EQ(evaluate_qexp(ramanujan_derive(p), 30), theta_apply(evaluate_qexp(p, 30), 1)) << weight;
  }
}

TEST(Eisenstein, DerivativeRaisesWeightByTwo) {
  Gen g(43);
  for (int weight = 2; weight <= 16; weight += 2) {
    EisensteinPoly p = random_poly(g, weight);
    if (p.is_zero()) continue;
    EXPECT_EQ(p.weights(), std::set<int>{weight});
    EisensteinPoly d = ramanujan_derive(p);
    if (!d.is_zero()) {
      EXPECT_EQ(d.weights(), std::set<int>{weight + 2});
    }
  }
}

TEST(Eisenstein, LogEtaDerivatives) {
  // theta^k eta = P_k eta with P_0 = 1 and P_{k+1} = D P_k + P_k L / 24.
  const int order = 30;
  Series<Rational> eta = to_rational(eta_qexp(1, order));
  EisensteinPoly pk = EisensteinPoly::constant(1);
  Series<Rational> lhs = eta;
  for (int k = 1; k <= 6; ++k) {
    pk = ramanujan_derive(pk) + pk * EisensteinPoly::L() * ratio(1, 24);
    lhs = theta_apply(lhs, 1);
    Series<Rational> rhs = multiply_schoolbook(eta, evaluate_qexp(pk, order));
    EXPECT_EQ(lhs, rhs) << k;
  }
}

TEST(Eisenstein, ValuesAtSpecialNome) {
  PrecisionContext ctx(40);
  EisensteinAtQ0 v = eisenstein_at_q0(ctx);
  EXPECT_LT(v.max_discrepancy, pow10(-40, ctx.bits()));
  EXPECT_TRUE(close(v.level1.L, 6L / ctx.pi(), 40));
  EXPECT_TRUE(close(eisenstein_sum(Eisenstein::L, -ctx.exp_minus_pi(), ctx), v.level1.L, 40));
  EXPECT_TRUE(close(v.level2.M, -v.level1.M / 4L, 40));
}

TEST(Eisenstein, PolynomialArithmetic) {
  auto l = EisensteinPoly::L(), m = EisensteinPoly::M();
  EXPECT_EQ(l * m, m * l);
  EXPECT_TRUE((l - l).is_zero());
  EXPECT_EQ(ramanujan_derive(l), (l * l - m) * ratio(1, 12));
  PrecisionContext ctx(20);
  BigReal two = ctx.real(2), three = ctx.real(3), one = ctx.real(1);
  EXPECT_EQ((l * m + m).evaluate(two, three, one, one), 9L);
}
