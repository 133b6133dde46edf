#include "magagm/certificates.hpp"

#include <cmath>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "magagm/errors.hpp"
#include "magagm/integral.hpp"
#include "magagm/quadrature.hpp"
#include "magagm/rational.hpp"
#include "magagm/series.hpp"

namespace magagm {

namespace {

const Rational kHalf = ratio(1, 2);

double log10_or_floor(const BigReal& x) {
  return x.is_zero() ? -std::numeric_limits<double>::infinity() : x.log10_abs();
}

// a(n;m,k) = C / ((k+1/2)_{m+1} (k+1/2)_{n-m+1}) with C = ((1/2)_m (1/2)_{n-m})^2 / n!.
Rational term_constant(long n, long m) {
  Rational p = pochhammer(kHalf, m) * pochhammer(kHalf, n - m);
  return p * p / Rational(factorial(n));
}

// Shifts b with a(n;m,x) = C / prod (x + b).
std::vector<Rational> term_shifts(long n, long m) {
  std::vector<Rational> b;
  for (long j = 0; j <= m; ++j) b.push_back(kHalf + j);
  for (long j = 0; j <= n - m; ++j) b.push_back(kHalf + j);
  return b;
}

BigReal term_at(const BigReal& c, const std::vector<BigReal>& shifts, const BigReal& x) {
  BigReal den = x + shifts[0];
  for (std::size_t i = 1; i < shifts.size(); ++i) den *= x + shifts[i];
  return c / den;
}

}  // namespace

Rational term_a(long n, long m, long k) {
  if (m < 0 || m > n || k < 0) throw DomainError("term_a: need 0 <= m <= n and k >= 0");
  Rational num = pochhammer(kHalf, m) * pochhammer(kHalf, n - m) * pochhammer(kHalf, k) * pochhammer(kHalf, k);
  Rational den = Rational(factorial(n)) * pochhammer(kHalf + m, k + 1) * pochhammer(kHalf + (n - m), k + 1);
  return num / den;
}

Rational term_a_tilde(long n, long m, long k) { return (Rational(m + k) + kHalf) * term_a(n, m, k); }

bool telescoping_certificate(long n, long m, long k) {
  const Rational d = Rational(n - m) + kHalf;
  const Rational lhs = Rational((n - m + 1) * (n - m + 1)) * term_a(n + 1, m, k) - d * d * term_a(n, m, k);
  const Rational rhs = d * d / Rational(n + 1) * (term_a_tilde(n, m, k + 1) - term_a_tilde(n, m, k));
  return lhs == rhs;
}

std::string to_string(TailMethod method) {
  return method == TailMethod::Bound ? "bound" : "euler-maclaurin";
}

AnmValue a_nm(long n, long m, const PrecisionContext& ctx) {
  AnmValue out;
  const mpfr_prec_t bits = ctx.bits();
  if (m < 0 || m > n || n < 0) {
    out.value = ctx.real(0);
    out.tail_bound = ctx.real(0);
    return out;
  }
  const BigReal c = ctx.real(term_constant(n, m));
  std::vector<BigReal> shifts;
  for (const Rational& b : term_shifts(n, m)) shifts.push_back(ctx.real(b));
  const BigReal a0 = term_at(c, shifts, ctx.real(0));
  const int target = ctx.digits() + ctx.guard() / 2;
  const BigReal tol = a0 * pow10(-target, bits);

  // Remainder from index K on is at most ~ a0 K^{-(n+1)}/(n+1) (see the
  // envelope below); pick the method from that estimate.
  const double k_needed = std::pow(10.0, (target + 1.0) / static_cast<double>(n + 1));
  const long bound_limit = 4000;

  auto step = [&](BigReal& a, long k) {
    // a(k+1)/a(k) = (k+1/2)^2 / ((k+m+3/2)(k+n-m+3/2)).
    BigReal kh = ctx.real(Rational(k) + kHalf);
    a *= kh * kh;
    a /= (kh + (m + 1)) * (kh + (n - m + 1));
  };

  if (k_needed <= bound_limit) {
    out.method = TailMethod::Bound;
    BigReal sum = ctx.real(0);
    BigReal a = a0;
    for (long k = 0;; ++k) {
      if (k % 8 == 0 && k > 0) {
        // a(n;m,k+1)/a(n;m,k) <= e(k+1)/e(k) with e(k) = 1/((k+1/2) prod_{j=0}^n (k+j+1/2)),
        // so the remainder from k on is at most a_k (1 + (k+1/2)^{-(n+1)} / ((n+1) e(k))).
        BigReal kh = ctx.real(Rational(k) + kHalf);
        BigReal inv_e = kh;
        for (long j = 0; j <= n; ++j) inv_e *= kh + j;
        BigReal bound = a * (1L + inv_e / (pow(kh, n + 1) * (n + 1)));
        if (bound < tol || k > 4 * bound_limit) {
          out.value = sum;
          out.tail_bound = bound;
          out.terms = k;
          return out;
        }
      }
      sum += a;
      step(a, k);
    }
  }

  out.method = TailMethod::EulerMaclaurin;
  const long kk = target + 2 * n + 10;
  BigReal sum = ctx.real(0);
  BigReal a = a0;
  for (long k = 0; k < kk; ++k) {
    sum += a;
    step(a, k);
  }
  const BigReal x0 = ctx.real(kk);
  const BigReal r0 = term_at(c, shifts, x0);

  // Taylor coefficients of R(K + t)/R(K) through exp of the log-derivative series.
  const int order = static_cast<int>(4 * kk + 2);
  std::vector<BigReal> logs(order + 1, BigReal(bits));
  for (const BigReal& b : shifts) {
    const BigReal inv = 1L / (x0 + b);
    BigReal p = inv;
    for (int i = 1; i <= order; ++i) {
      BigReal t = p / static_cast<long>(i);
      if (i % 2) logs[i] -= t;
      else logs[i] += t;
      p *= inv;
    }
  }
  const auto taylor = exp_series(Series<BigReal>(logs));
  const auto bern = bernoulli_numbers(order + 2);

  const TanhSinh ts(ctx, 10);
  auto integrand = [&](const BigReal& x) { return term_at(c, shifts, x); };
  const QuadratureResult integral = ts.integrate_to_infinity(integrand, x0, ctx.epsilon());
  if (!integral.converged) throw PrecisionError("a_nm: tail integral did not converge");

  BigReal tail = integral.value + r0 / 2L;
  BigReal last = ctx.real(0);
  bool small = false;
  for (int j = 1; 2 * j <= order; ++j) {
    // B_{2j}/(2j)! R^{(2j-1)}(K) = B_{2j}/(2j) R(K) taylor_{2j-1}.
    BigReal t = r0 * taylor[2 * j - 1] * (bern[2 * j] / Rational(2 * j));
    if (small) {
      last = abs(t);
      break;
    }
    tail -= t;
    if (abs(t) < tol) small = true;
  }
  if (!small) throw PrecisionError("a_nm: Euler-Maclaurin tail did not reach the tolerance");
  out.value = sum + tail;
  out.tail_bound = last + integral.error_estimate;
  out.terms = kk;
  return out;
}

CertificateReport telescoping_grid(long n_max, long k_max) {
  CertificateReport r;
  r.name = "telescoping";
  r.grid = "n<=" + std::to_string(n_max) + ", m<=n, k<=" + std::to_string(k_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n; ++m) {
      for (long k = 0; k <= k_max; ++k) {
        ++r.checked;
        if (!telescoping_certificate(n, m, k)) ++r.failures;
      }
    }
  }
  r.worst_log10_residual = -std::numeric_limits<double>::infinity();
  r.worst_log10_bound = -std::numeric_limits<double>::infinity();
  r.passed = r.failures == 0;
  return r;
}

namespace {

Rational r3_rhs(long n, long m) {
  return -(pochhammer(kHalf, n + 1 - m) * pochhammer(kHalf, m)) / Rational(factorial(n + 1));
}

class AnmCache {
 public:
  explicit AnmCache(const PrecisionContext& ctx) : ctx_(ctx) {}
  const AnmValue& get(long n, long m) {
    auto key = std::make_pair(n, m);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, a_nm(n, m, ctx_)).first;
    return it->second;
  }

 private:
  const PrecisionContext& ctx_;
  std::map<std::pair<long, long>, AnmValue> cache_;
};

R3Report r3_with(long n, long m, AnmCache& cache, const PrecisionContext& ctx) {
  if (m < 1 || m > n + 1) throw DomainError("verify_r3: need 1 <= m <= n+1");
  R3Report r;
  r.n = n;
  r.m = m;
  const AnmValue& x = cache.get(n + 1, m);
  const AnmValue& y = cache.get(n, m - 1);
  const Rational mh = Rational(m) - kHalf;
  const Rational w1 = Rational(m * m);
  const Rational w2 = mh * mh;
  r.lhs = x.value * w1 - y.value * w2;
  r.rhs = r3_rhs(n, m);
  r.residual = abs(r.lhs - ctx.real(r.rhs));
  // Tail bounds plus rounding at the reporting tolerance, scaled by the terms.
  r.bound = x.tail_bound * w1 + y.tail_bound * w2 +
            (abs(x.value) * w1 + abs(y.value) * w2) * pow10(-ctx.digits(), ctx.bits());
  r.passed = r.residual <= r.bound;
  return r;
}

}  // namespace

R3Report verify_r3(long n, long m, const PrecisionContext& ctx) {
  AnmCache cache(ctx);
  return r3_with(n, m, cache, ctx);
}

CertificateReport verify_r3_grid(long n_max, const PrecisionContext& ctx) {
  CertificateReport r;
  r.name = "R3";
  r.grid = "n<=" + std::to_string(n_max) + ", 1<=m<=n+1";
  AnmCache cache(ctx);
  BigReal worst = ctx.real(0), worst_bound = ctx.real(0);
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 1; m <= n + 1; ++m) {
      R3Report one = r3_with(n, m, cache, ctx);
      ++r.checked;
      if (!one.passed) ++r.failures;
      worst = max(worst, one.residual);
      worst_bound = max(worst_bound, one.bound);
    }
  }
  r.worst_log10_residual = log10_or_floor(worst);
  r.worst_log10_bound = log10_or_floor(worst_bound);
  r.passed = r.failures == 0;
  return r;
}

CertificateReport verify_shift_combination(long n_max, const PrecisionContext& ctx) {
  CertificateReport r;
  r.name = "R3 shifted difference";
  r.grid = "1<=m<=n<=" + std::to_string(n_max);
  AnmCache cache(ctx);
  BigReal worst = ctx.real(0), worst_bound = ctx.real(0);
  for (long n = 1; n <= n_max; ++n) {
    for (long m = 1; m <= n; ++m) {
      ++r.checked;
      const Rational w = Rational(n - m) + kHalf;
      const Rational rhs = Rational(n + 1) * r3_rhs(n, m) - w * r3_rhs(n - 1, m);
      R3Report hi = r3_with(n, m, cache, ctx);
      R3Report lo = r3_with(n - 1, m, cache, ctx);
      BigReal lhs = hi.lhs * (n + 1) - lo.lhs * w;
      BigReal bound = hi.bound * (n + 1) + lo.bound * w;
      BigReal residual = abs(lhs);
      if (rhs != 0 || residual > bound) ++r.failures;
      worst = max(worst, residual);
      worst_bound = max(worst_bound, bound);
    }
  }
  r.worst_log10_residual = log10_or_floor(worst);
  r.worst_log10_bound = log10_or_floor(worst_bound);
  r.passed = r.failures == 0;
  return r;
}

IRReport verify_ir(long n) {
  if (n < 1) throw DomainError("verify_ir: need n >= 1");
  const auto s = y_coeffs(static_cast<int>(n + 1));
  const auto t = t_coeffs(static_cast<int>(n + 2));
  const PiQuadratic lhs = s[n + 1] * ratio((n + 1) * (n + 1) * (n + 1), 4) -
                          s[n] * ratio((2 * n + 1) * (2 * n * n + 2 * n + 1), 8) + s[n - 1] * ratio(n * n * n, 4);
  const Rational rhs = -Rational(n + 2) * t[n + 2] + Rational(n + 2) * t[n + 1] / 2 + Rational(n) * t[n] / 2 +
                       pochhammer(kHalf, n + 1) / (2 * Rational(factorial(n + 1)));
  IRReport r;
  r.n = n;
  r.exact = lhs == PiQuadratic(rhs);
  r.pi2_homogeneous = lhs.pi2_part() == 0;
  return r;
}

CertificateReport verify_ir_grid(long n_max) {
  CertificateReport r;
  r.name = "IR";
  r.grid = "1<=n<=" + std::to_string(n_max);
  for (long n = 1; n <= n_max; ++n) {
    ++r.checked;
    IRReport one = verify_ir(n);
    if (!one.exact || !one.pi2_homogeneous) ++r.failures;
  }
  r.worst_log10_residual = -std::numeric_limits<double>::infinity();
  r.worst_log10_bound = -std::numeric_limits<double>::infinity();
  r.passed = r.failures == 0;
  return r;
}

Rational c_nm(long n, long m) {
  return pochhammer(kHalf, m) * pochhammer(kHalf, n - m) / Rational(factorial(n));
}

Rational t_direct(long n) {
  Rational t = 0;
  for (long m = 1; m <= n; ++m) t += c_nm(n, m);
  return t;
}

TRecursionReport verify_t_recursion(long n_max) {
  TRecursionReport r;
  r.n_max = n_max;
  const auto t = t_coeffs(static_cast<int>(n_max + 1));

  r.direct_matches_recursion = true;
  for (long n = 0; n <= n_max; ++n) {
    if (t_direct(n) != t[n]) r.direct_matches_recursion = false;
    if (2 * t_direct(n + 1) - t_direct(n) != half_pochhammer_ratio(n)) r.direct_matches_recursion = false;
  }

  // h / ((2-h) sqrt(1-h)).
  const int order = static_cast<int>(n_max);
  std::vector<Rational> one_minus(order + 1, Rational(0)), two_minus(order + 1, Rational(0));
  one_minus[0] = 1;
  two_minus[0] = 2;
  if (order >= 1) {
    one_minus[1] = -1;
    two_minus[1] = -1;
  }
  const Series<Rational> denom = Series<Rational>(two_minus) * sqrt(Series<Rational>(one_minus));
  const Series<Rational> gf = reciprocal(denom).shifted(1).truncated(order);
  r.generating_function = true;
  for (int n = 0; n <= order; ++n) {
    if (gf[n] != t[n]) r.generating_function = false;
  }

  r.c_closed_form = true;
  r.c_shift_identity = true;
  for (long n = 0; n <= std::min<long>(n_max, 20); ++n) {
    for (long m = 0; m <= n; ++m) {
      Rational closed = pochhammer(kHalf - m, n) / Rational(factorial(n));
      if (m % 2) closed = -closed;
      if (closed != c_nm(n, m)) r.c_closed_form = false;
      if (m >= 1) {
        Rational next = m + 1 <= n + 1 ? c_nm(n + 1, m + 1) : Rational(0);
        if (2 * c_nm(n + 1, m) - c_nm(n, m) != c_nm(n + 1, m) - next) r.c_shift_identity = false;
      }
    }
  }

  r.pochhammer_step = true;
  for (long k = 0; k <= 30; ++k) {
    for (const Rational& a : {kHalf, Rational(1), ratio(3, 2), ratio(-7, 2)}) {
      if (pochhammer(a, k + 1) != pochhammer(a, k) * (a + k)) r.pochhammer_step = false;
    }
  }
  return r;
}

std::vector<PiQuadratic> s2_from_recursion(long n_max) {
  const auto s0 = y_coeffs(static_cast<int>(n_max));
  const auto t = t_coeffs(static_cast<int>(n_max + 1));
  std::vector<PiQuadratic> s2{PiQuadratic(0L)};
  for (long n = 0; n < n_max; ++n) {
    s2.push_back(s2[n] + s0[n] * ratio(2 * n + 1, 4) - PiQuadratic(t[n + 1]));
  }
  return s2;
}

MomentReport verify_moments(long n_max, const PrecisionContext& ctx) {
  MomentReport r;
  r.n_max = n_max;
  const auto s2_exact = s2_from_recursion(n_max);
  BigReal w2 = ctx.real(0), w1 = ctx.real(0), w3 = ctx.real(0), wb = ctx.real(0);
  for (long n = 0; n <= n_max; ++n) {
    BigReal s0 = ctx.real(0), s1 = ctx.real(0), s2 = ctx.real(0), s3 = ctx.real(0), tail = ctx.real(0);
    for (long m = 0; m <= n; ++m) {
      AnmValue a = a_nm(n, m, ctx);
      s0 += a.value;
      s1 += a.value * m;
      s2 += a.value * (m * m);
      s3 += a.value * (m * m * m);
      tail += a.tail_bound * std::max<long>(1, n * n * n);
    }
    w2 = max(w2, abs(s2 - s2_exact[n].to_real(ctx)));
    w1 = max(w1, abs(s1 - s0 * n / 2L));
    w3 = max(w3, abs(s3 - s2 * (3 * n) / 2L + s0 * (n * n * n) / 4L));
    wb = max(wb, tail);
  }
  r.worst_s1 = log10_or_floor(w1);
  r.worst_s2 = log10_or_floor(w2);
  r.worst_s3 = log10_or_floor(w3);
  r.worst_bound = log10_or_floor(wb);
  const BigReal allowed = wb + pow10(-ctx.digits(), ctx.bits());
  r.passed = w1 <= allowed && w2 <= allowed && w3 <= allowed;
  return r;
}

BigReal y_quadrature(const BigReal& h, int digits, BigReal* error_estimate) {
  if (digits > 40) throw PrecisionError("y_quadrature supports at most 40 digits");
  const PrecisionContext ctx(std::max(digits, 10) + 8, 10);
  const BigReal hh = h.with_precision(ctx.bits());
  if (!(hh >= 0L && hh < 1L)) throw DomainError("y_quadrature: need 0 <= h < 1");
  const TanhSinh ts(ctx, 10);
  const BigReal tol = pow10(-(digits + 3), ctx.bits());
  const BigReal zero = ctx.real(0);
  BigReal inner_error = ctx.real(0);
  auto outer = [&](const BigReal& v, const BigReal& v_from_0, const BigReal& one_minus_v) {
    auto inner = [&](const BigReal& u, const BigReal& u_from_0, const BigReal& v_minus_u) {
      const BigReal one_minus_u = one_minus_v + v_minus_u;
      return 1L / sqrt(u_from_0 * one_minus_u * (1L - u * hh));
    };
    const QuadratureResult in = ts.integrate(inner, zero, v, tol);
    inner_error = max(inner_error, in.error_estimate);
    return in.value / sqrt(v_from_0 * one_minus_v * (1L - one_minus_v * hh));
  };
  const QuadratureResult out = ts.integrate(outer, zero, ctx.real(1), tol);
  if (!out.converged) throw PrecisionError("y_quadrature did not converge");
  if (error_estimate) *error_estimate = out.error_estimate + inner_error;
  return out.value;
}

Eq1Report verify_eq1_end_to_end(const BigReal& h, int digits) {
  if (digits > 40) throw PrecisionError("verify_eq1_end_to_end supports at most 40 digits");
  const PrecisionContext ctx(digits + 5, 20);
  Eq1Report r;
  r.h = h.with_precision(ctx.bits());
  r.digits = digits;
  if (!(r.h >= 0L && r.h < 1L)) throw DomainError("verify_eq1_end_to_end: need 0 <= h < 1");

  r.direct = y_quadrature(r.h, digits, &r.quadrature_error);

  // Both series routes stop where h^n S0(n) drops below the target; the
  // remainder is bounded by twice the last S0 times the geometric tail,
  // S0(n) being eventually decreasing.
  const BigReal tol = pow10(-(digits + 3), ctx.bits());
  BigReal triple = ctx.real(0), hn = ctx.real(1), last_s0 = ctx.real(0);
  long n = 0;
  for (;; ++n) {
    BigReal s0 = ctx.real(0);
    for (long m = 0; m <= n; ++m) s0 += a_nm(n, m, ctx).value;
    triple += s0 * hn;
    last_s0 = s0;
    if (r.h.is_zero() || (n > 4 && s0 * hn < tol)) break;
    hn *= r.h;
  }
  r.series_terms = n + 1;
  r.series_tail = r.h.is_zero() ? ctx.real(0) : last_s0 * hn * r.h * 2L / (1L - r.h);
  r.triple = triple;

  const auto s0_exact = y_coeffs(static_cast<int>(n));
  BigReal rec = ctx.real(0);
  hn = ctx.real(1);
  for (long i = 0; i <= n; ++i) {
    rec += s0_exact[i].to_real(ctx) * hn;
    hn *= r.h;
  }
  r.recursion = rec;

  BigReal spread = max(abs(r.direct - r.triple), max(abs(r.direct - r.recursion), abs(r.triple - r.recursion)));
  r.log10_max_spread = log10_or_floor(spread);
  r.passed = spread < pow10(-digits, ctx.bits()) * abs(r.recursion);
  return r;
}

std::string certificate_report_json(const std::vector<CertificateReport>& reports) {
  auto finite_or_null = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    out.push_back({{"identity", r.name},
                   {"grid", r.grid},
                   {"checked", r.checked},
                   {"failures", r.failures},
                   {"worst_log10_residual", finite_or_null(r.worst_log10_residual)},
                   {"worst_log10_bound", finite_or_null(r.worst_log10_bound)},
                   {"passed", r.passed}});
  }
  return out.dump(2);
}

}  // namespace magagm
