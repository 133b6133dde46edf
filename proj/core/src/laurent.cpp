#include "magagm/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "magagm/errors.hpp"
#include "magagm/rational.hpp"
#include "magagm/series.hpp"
#include "magagm/special.hpp"

namespace magagm {

namespace {

// Every tau-derivative at t+ carries 2 pi i, so a Taylor coefficient of
// order k is i^k times a real number; the pipeline below works with those
// real parts, i.e. in the variable w = i z.
std::vector<BigReal> ramanujan_taylor_l(const BigReal& l0, const BigReal& m0, int order, long scale,
                                        const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const BigReal two_pi = ctx.pi() * (2 * scale);
  std::vector<BigReal> l{l0}, m{m0}, n{BigReal(bits)};
  l.reserve(order + 1);
  m.reserve(order + 1);
  n.reserve(order + 1);
  for (int k = 0; k < order; ++k) {
    BigReal ll(bits), lm(bits), ln(bits), mm(bits);
    for (int i = 0; i <= k; ++i) {
      ll += l[i] * l[k - i];
      lm += l[i] * m[k - i];
      ln += l[i] * n[k - i];
      mm += m[i] * m[k - i];
    }
    const long kp = k + 1;
    l.push_back(two_pi * (ll - m[k]) / (12 * kp));
    m.push_back(two_pi * (lm - n[k]) / (3 * kp));
    n.push_back(two_pi * (ln - mm) / (2 * kp));
  }
  return l;
}

struct NumericRun {
  int digits = 0;
  BigReal d;
  std::vector<BigReal> g;  // normalised z^j coefficients, g[0] = 1
  std::vector<BigReal> c;  // c[n-1]
};

NumericRun run_pipeline(int order, int digits) {
  const PrecisionContext ctx(digits, 20);
  const mpfr_prec_t bits = ctx.bits();
  const BigReal& pi = ctx.pi();
  const BigReal m1 = -(3L * pow(gamma_quarter(ctx), 8)) / (16L * pow(pi, 6));

  const int t = order + 2;
  const auto l1 = ramanujan_taylor_l(6L / pi, m1, t, 1, ctx);
  const auto l2 = ramanujan_taylor_l(3L / pi, -m1 / 4L, t, 2, ctx);

  // Increments of log eta_1, log eta_2 and the exponents of (eta1 eta2)^4 and (eta2/eta1)^24.
  std::vector<BigReal> u(t + 1, BigReal(bits)), v(t + 1, BigReal(bits));
  const BigReal two_pi = pi * 2L;
  for (int k = 0; k < t; ++k) {
    BigReal d1 = two_pi * l1[k] / (24L * (k + 1));
    BigReal d2 = two_pi * l2[k] * 2L / (24L * (k + 1));
    u[k + 1] = (d1 + d2) * 4L;
    v[k + 1] = (d2 - d1) * 24L;
  }
  // (eta2/eta1)^24 has a double zero of 1 + 64 (eta2/eta1)^24 at t+: v_1 = 0 analytically.
  v[1] = BigReal(bits);

  const auto ev = exp_series(Series<BigReal>(v));
  const auto eu = exp_series(Series<BigReal>(u).truncated(order));
  std::vector<BigReal> w(order + 1), num(order + 1);
  for (int k = 0; k <= order; ++k) {
    w[k] = ev[k + 2];
    num[k] = ev[k];
  }
  num[0] = num[0] + 1L;
  const auto psi = eu * Series<BigReal>(num) * reciprocal(Series<BigReal>(w));

  // G_n = -4 pi^2 a0 sum_k (-1)^k psi_k C(n+1, k+1), a0 = -M(q0)/24.
  const BigReal front = pi * pi * m1 / 6L;
  NumericRun out;
  out.digits = digits;
  out.g.reserve(order + 1);
  std::vector<Integer> row{1, 1};  // C(1, .)
  for (int n = 0; n <= order; ++n) {
    BigReal acc(bits);
    for (int k = 0; k <= n; ++k) {
      BigReal term = psi[k] * BigReal(row[k + 1], bits);
      if (k % 2) acc -= term;
      else acc += term;
    }
    out.g.push_back(front * acc);
    std::vector<Integer> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }

  const BigReal root = pi * pi * m1 / 24L;
  out.d = root * root;
  const BigReal minus_four_d = out.d * -4L;
  BigReal scale = ctx.real(-2);
  for (int n = 1; 4 * n + 4 <= order; ++n) {
    scale *= minus_four_d;
    out.c.push_back(out.g[4 * n] / scale);
  }
  return out;
}

double relative_log10(const BigReal& err, const BigReal& ref) {
  if (err.is_zero()) return -std::numeric_limits<double>::infinity();
  return err.log10_abs() - ref.log10_abs();
}

}  // namespace

int laurent_order_for(int n_max) { return 4 * n_max + 4; }

BigReal laurent_d(const PrecisionContext& ctx) {
  const BigReal& pi = ctx.pi();
  return pow(pi, 4) / (4L * pow(agm(ctx.real(1), sqrt(ctx.real(2)), ctx), 8));
}

LaurentResult phi_laurent(int K, int digits, int max_digits) {
  if (K < 8 || K % 2) throw DomainError("phi_laurent: order must be even and at least 8");
  const int n_max = (K - 4) / 4;
  int p = digits > 0 ? digits : 40 + 10 * n_max;
  NumericRun a = run_pipeline(K, p);
  for (;;) {
    if (2 * p > max_digits) throw PrecisionError("phi_laurent: coefficients not confirmed within the digit budget");
    NumericRun b = run_pipeline(K, 2 * p);
    LaurentResult result;
    result.achieved_order = K;
    result.digits = p;
    bool confirmed = true;
    for (int n = 1; n <= n_max && confirmed; ++n) {
      const BigReal& x = a.c[n - 1];
      const BigReal& y = b.c[n - 1];
      const mpfr_prec_t bits = y.precision();
      double avail = -relative_log10(abs(x - y), y);
      avail = std::min(avail, static_cast<double>(p));
      const double lost = p - avail;
      result.digits_lost.push_back(lost);
      const int cap_a = static_cast<int>(avail) - 15;
      const int avail_b = static_cast<int>(2 * p - lost);
      if (cap_a <= 2) {
        confirmed = false;
        break;
      }
      const BigReal tol_a = abs(y) * pow10(2 - static_cast<long>(avail), bits);
      const BigReal tol_b = abs(y) * pow10(2 - static_cast<long>(avail_b), bits);
      auto ra = reconstruct_rational(x, tol_a, cap_a);
      auto rb = reconstruct_rational(y, tol_b, avail_b - 15);
      if (!ra || !rb || *ra != *rb) {
        confirmed = false;
        break;
      }
      result.c.push_back(*ra);
    }
    if (confirmed) {
      result.D = a.d;
      double off = -std::numeric_limits<double>::infinity();
      for (int j = 1; j <= K; ++j) {
        if (j % 4 == 0) continue;
        const int lo = 4 * (j / 4);
        const int hi = std::min(K, lo + 4);
        const BigReal ref = max(abs(a.g[lo]), abs(a.g[hi]));
        off = std::max(off, relative_log10(abs(a.g[j]), ref));
      }
      result.off_pattern_log10 = off;
      result.leading_log10 = relative_log10(abs(a.g[0] - 1L), BigReal(1L, 64));
      return result;
    }
    a = std::move(b);
    p *= 2;
  }
}

CnPropertyReport cn_properties(const LaurentResult& result, int n_max) {
  if (n_max > static_cast<int>(result.c.size())) throw InsufficientOrderError("cn_properties: c_n not available");
  CnPropertyReport report;
  report.passed = true;
  for (int n = 1; n <= n_max; ++n) {
    const Rational& c = result.c[n - 1];
    CnPropertyRow row;
    row.n = n;
    const Integer& num = c.get_num();
    const Integer& den = c.get_den();
    row.a = c > 0 && mpz_odd_p(num.get_mpz_t()) && mpz_odd_p(den.get_mpz_t());

    row.b = factor_smooth(den, 4L * n + 1).cofactor == 1;

    Rational scaled = Rational(factorial(4L * n + 5)) * c;
    const Integer& d5 = scaled.get_den();
    row.c = true;
    if (d5 != 1) {
      auto fs = factor_smooth(d5, n - 1);
      row.c = fs.cofactor == 1;
      for (const auto& f : fs.factors) {
        if (f.exponent != 1 || mpz_fdiv_ui(f.prime.get_mpz_t(), 4) != 1) row.c = false;
      }
    }
    if (!row.a) row.detail += "not a positive odd/odd ratio; ";
    if (!row.b) row.detail += "denominator has a prime above 4n+1; ";
    if (!row.c) row.detail += "denominator of (4n+5)! c_n is " + d5.get_str() + "; ";
    report.passed = report.passed && row.a && row.b && row.c;
    report.rows.push_back(std::move(row));
  }
  return report;
}

CnAsymptoticReport cn_asymptotic_check(const LaurentResult& result, int n_from) {
  CnAsymptoticReport report;
  report.n_from = n_from;
  const int n_max = static_cast<int>(result.c.size());
  if (n_max < n_from) throw InsufficientOrderError("cn_asymptotic_check: need c_n up to n_from");
  const mpfr_prec_t bits = bits_for_digits(60);
  const BigReal d = result.D.with_precision(bits);
  BigReal dn(1L, bits);
  const double env_base = std::log10(5.0 / 8.0) * 2;
  int last_sign = 0;
  for (int n = 1; n <= n_max; ++n) {
    dn *= d;
    BigReal dev = BigReal(result.c[n - 1], bits) * dn / (8L * n - 6) - 1L;
    CnAsymptoticRow row;
    row.n = n;
    row.deviation = dev.to_double();
    row.envelope = std::pow(10.0, abs(dev).log10_abs() - env_base * n);
    if (dev.is_zero()) row.envelope = 0;
    if (n >= n_from) {
      report.max_envelope = std::max(report.max_envelope, row.envelope);
      const int s = dev.sign();
      if (last_sign != 0 && s != 0 && s != last_sign) ++report.sign_changes;
      if (s != 0) last_sign = s;
    }
    report.rows.push_back(row);
  }
  report.passed = report.max_envelope <= 10.0;
  return report;
}

SumRuleReport sum_rule_check(const LaurentResult& result, int target_digits, int n_exact, bool include_tail) {
  if (n_exact < 0) n_exact = static_cast<int>(result.c.size());
  if (n_exact > static_cast<int>(result.c.size())) throw InsufficientOrderError("sum_rule_check: c_n not available");
  const PrecisionContext ctx(target_digits + 20, 20);
  const BigReal d = laurent_d(ctx);
  const BigReal s4 = pow(2L - sqrt(ctx.real(2)), 4);
  SumRuleReport report;
  report.n_exact = n_exact;
  report.target_digits = target_digits;
  BigReal lhs = ctx.real(0);
  BigReal x = ctx.real(1);
  const BigReal ds4 = d * s4;
  for (int n = 1; n <= n_exact; ++n) {
    x *= ds4;
    lhs += BigReal(result.c[n - 1], ctx.bits()) * x * 2L;
  }
  BigReal tail = ctx.real(0);
  double model_error = -std::numeric_limits<double>::infinity();
  if (include_tail) {
    BigReal sn = pow(s4, n_exact);
    const BigReal eps = ctx.epsilon();
    for (long n = n_exact + 1;; ++n) {
      sn *= s4;
      BigReal term = sn * (2L * (8 * n - 6));
      tail += term;
      if (n == n_exact + 1) {
        // The model misses a relative (5/8)^{2n} correction with constant ~10.
        model_error = term.log10_abs() + 1 + 2 * n * std::log10(5.0 / 8.0) + std::log10(1 / (1 - 0.4));
      }
      if (term < eps) break;
    }
  }
  lhs += tail;
  report.lhs = lhs;
  report.tail = tail;
  report.log10_model_error = model_error;
  BigReal dev = abs(lhs - 1L);
  report.log10_deviation = dev.is_zero() ? -std::numeric_limits<double>::infinity() : dev.log10_abs();
  report.passed = dev < pow10(-target_digits, ctx.bits());
  return report;
}

std::string laurent_json(const LaurentResult& result) {
  nlohmann::json out;
  out["D"] = result.D.to_string(std::min(60, result.digits));
  out["digits"] = result.digits;
  out["achieved_order"] = result.achieved_order;
  out["c"] = nlohmann::json::array();
  for (std::size_t i = 0; i < result.c.size(); ++i) {
    out["c"].push_back({{"n", i + 1},
                        {"numerator", result.c[i].get_num().get_str()},
                        {"denominator", result.c[i].get_den().get_str()}});
  }
  return out.dump(2);
}

std::string cn_properties_json(const CnPropertyReport& report) {
  nlohmann::json out;
  out["passed"] = report.passed;
  out["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    out["rows"].push_back({{"n", r.n}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"detail", r.detail}});
  }
  return out.dump(2);
}

}  // namespace magagm
