#include <gtest/gtest.h>

#include <numeric>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "magagm/asymptotics.hpp"

using namespace magagm;
using magagm::testing::close;
using magagm::testing::Gen;

namespace {

bool brute_in_s(long m) {
  if (m < 1) return false;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    if (p % 4 != 1) return false;
    while (m % p == 0) m /= p;
  }
  return m == 1 || m % 4 == 1;
}

int distinct_primes(long m) {
  int count = 0;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    ++count;
    while (m % p == 0) m /= p;
  }
  return count + (m > 1 ? 1 : 0);
}

}  // namespace

TEST(Sequence, MembershipMatchesTrialDivision) {
  for (long m = 1; m <= 3000; ++m) EXPECT_EQ(in_s(m), brute_in_s(m)) << m;
  auto s = s_sequence(100);
  EXPECT_EQ(std::vector<long>(s.begin(), s.begin() + 6), (std::vector<long>{1, 5, 13, 17, 25, 29}));
}

TEST(Sequence, CoprimeDecompositions) {
  for (long m : s_sequence(5000)) {
    if (m == 1) continue;
    auto d = coprime_square_decompositions(m);
    EXPECT_EQ(static_cast<long>(d.size()), 1L << (distinct_primes(m) - 1)) << m;
    for (const auto& x : d) {
      EXPECT_EQ(x.gamma * x.gamma + x.delta * x.delta, m);
      EXPECT_EQ(x.gamma % 2, 1);
      EXPECT_EQ(std::gcd(x.gamma, x.delta), 1);
    }
  }
  EXPECT_THROW(coprime_square_decompositions(3), DomainError);
}

TEST(Singularities, EveryDatumMapsToTheBasePole) {
  for (long m : s_sequence(3000)) {
    if (m == 1) continue;
    SingularitySet set = singularities(m);
    EXPECT_TRUE(set.violations.empty()) << m;
    for (const auto& s : set.data) {
      EXPECT_TRUE(maps_to_base_pole(s)) << m;
      EXPECT_EQ(s.a * s.d - s.b * s.c, 1);
      EXPECT_EQ(s.w % 2, 1);
      EXPECT_EQ(s.r, (m - s.w) / 2);
    }
  }
}

TEST(Singularities, KnownOffsets) {
  std::vector<std::pair<long, long>> expect = {{5, 1}, {13, 4}, {65, 7}, {1105, 216}, {2017, 894}};
  for (auto [m, r] : expect) {
    ROfM got = r_of_m(m);
    EXPECT_TRUE(got.found);
    EXPECT_EQ(got.r, r) << m;
  }
}

TEST(Singularities, CosineIdentityExactAndNumeric) {
  PrecisionContext ctx(20);
  for (long m : {5L, 13L, 65L, 85L, 221L}) {
    CosineCheck c = cosine_identity_check(m, &ctx);
    EXPECT_TRUE(c.exact) << m;
    EXPECT_TRUE(c.numeric_run);
    EXPECT_TRUE(c.numeric) << m;
    EXPECT_LT(c.max_residual, 1e-15);
  }
}

TEST(Asymptotics, EFunctionAndCoefficients) {
  PrecisionContext ctx(30);
  BigReal x = ctx.parse("2.5");
  EXPECT_TRUE(close(e_function(x), (x - 1L) / x * exp(x), 30));
  AsymptoticModel model = AsymptoticModel::build(30);
  Gen g(51);
  for (int i = 0; i < 10; ++i) {
    long n = g.integer(0, 1000);
    EXPECT_EQ(c_coeff(1, n, model, ctx), 1L);
    EXPECT_TRUE(c_coeff(3, n, model, ctx).is_zero());
    EXPECT_TRUE(close(c_coeff(5, n, model, ctx), c_coeff_with_r(5, n, model.r.at(5), ctx), 30));
  }
}

TEST(Asymptotics, ResidualScanImprovesWithMoreTerms) {
  FourierTable t = phi_qexp(300);
  ResidualScan s1 = residual_scan(t, 150, 300, 1);
  ResidualScan s5 = residual_scan(t, 150, 300, 5);
  EXPECT_GT(s5.mean_coverage, s1.mean_coverage);
  EXPECT_EQ(s5.next_m, 13);
  EXPECT_EQ(s1.rows.size(), 151U);
  EXPECT_NE(residual_scan_csv(s1).find('\n'), std::string::npos);
}

TEST(Asymptotics, FitRecoversPredictedOffset) {
  FourierTable t = phi_qexp(400);
  CoefficientFit fit = fit_unknown_c(t, 150, 400, 5);
  EXPECT_EQ(fit.best_r, 1);
  EXPECT_LT(fit.max_abs_error, 1e-3 * std::max(1.0, fit.max_abs_estimate));
}

TEST(Asymptotics, SingularityJsonShape) {
  std::vector<ROfM> rs = {r_of_m(5), r_of_m(65)};
  std::vector<CosineCheck> cs = {cosine_identity_check(5), cosine_identity_check(65)};
  auto j = nlohmann::json::parse(singularity_report_json(rs, cs));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["m"], 5);
  EXPECT_EQ(j[1]["r"], 7);
  EXPECT_TRUE(j[1].contains("matrices"));
  EXPECT_TRUE(j[1]["verified"].get<bool>());
}
