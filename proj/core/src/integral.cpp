#include "magagm/integral.hpp"

#include <cmath>

#include "magagm/errors.hpp"
#include "magagm/quadrature.hpp"
#include "magagm/rational.hpp"
#include "magagm/special.hpp"

namespace magagm {

std::vector<Rational> a_coeffs(int n_max) {
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  Rational prev2 = 0;
  Rational prev1 = 1;
  a.push_back(prev1);
  for (long n = 1; n <= n_max; ++n) {
    Rational rhs = Rational(4 * n * (4 * n * n + 1)) * prev1 - Rational((2 * n - 1) * (2 * n - 1) * (2 * n - 1)) * prev2 +
                   Rational(n % 2 == 0 ? 8 * n : -8 * n);
    Rational an = rhs / Rational((2 * n + 1) * (2 * n + 1) * (2 * n + 1));
    an.canonicalize();
    a.push_back(an);
    prev2 = std::move(prev1);
    prev1 = std::move(an);
  }
  return a;
}

namespace {

// One step of the a_n recursion in floating point.
BigReal next_a(long n, const BigReal& prev1, const BigReal& prev2) {
  BigReal rhs = prev1 * (4 * n * (4 * n * n + 1)) - prev2 * ((2 * n - 1) * (2 * n - 1) * (2 * n - 1)) +
                (n % 2 == 0 ? 8 * n : -8 * n);
  return rhs / ((2 * n + 1) * (2 * n + 1) * (2 * n + 1));
}

}  // namespace

std::vector<BigReal> a_coeffs_numeric(int n_max, const PrecisionContext& ctx) {
  std::vector<BigReal> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  BigReal prev2 = ctx.real(0);
  a.push_back(ctx.real(1));
  for (long n = 1; n <= n_max; ++n) {
    BigReal an = next_a(n, a.back(), prev2);
    prev2 = a.back();
    a.push_back(std::move(an));
  }
  return a;
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Negative:
      return "negative";
    case ReductionKind::Inverse:
      return "inverse";
    case ReductionKind::Involution:
      return "involution";
  }
  return "unknown";
}

ReductionTrace reduce_f(const BigReal& f, const PrecisionContext& ctx) {
  BigReal x = f.with_precision(ctx.bits());
  if (x == -1L) throw PoleError("I2 has a pole at f = -1");
  ReductionTrace trace{x, {}, x};
  auto push = [&](ReductionKind kind, BigReal to) {
    trace.steps.push_back({kind, x, to});
    x = std::move(to);
  };
  if (x < -1L) push(ReductionKind::Inverse, ctx.real(1) / x);
  if (x.sign() < 0) push(ReductionKind::Negative, -x);
  if (x > 1L) push(ReductionKind::Inverse, ctx.real(1) / x);
  const BigReal fixed_point = sqrt(ctx.real(2)) - 1L;
  if (x > fixed_point) push(ReductionKind::Involution, (1L - x) / (1L + x));
  trace.final_f = x;
  return trace;
}

namespace {

// (1+f) [pi^2/8 / agm(1+f, 1-f)^2 - sum a_n f^{2n+1}] for |f| < 1.
BigReal i2_odd_series(const BigReal& f, const PrecisionContext& ctx) {
  const BigReal pi2_8 = ctx.pi() * ctx.pi() / 8L;
  const BigReal m = agm(1L + f, 1L - f, ctx);
  const BigReal even = pi2_8 / (m * m);
  const BigReal f2 = f * f;
  const BigReal one_minus_f2 = 1L - f2;
  // I2/(1+f) >= 1/2 for 0 <= f < 1 and is larger for f < 0, so an absolute
  // bound of eps/2 on the tail is a relative bound of eps.
  const BigReal tail_target = ctx.epsilon() * one_minus_f2 / 2L;
  BigReal odd = f;
  BigReal power = f;  // f^{2n+1}
  BigReal prev2 = ctx.real(0);
  BigReal prev1 = ctx.real(1);
  // With |a_k| <= 1 the terms after f^{2n+1} sum to at most |f|^{2n+3}/(1-f^2).
  for (long n = 1; abs(power) * f2 >= tail_target; ++n) {
    power *= f2;
    BigReal an = next_a(n, prev1, prev2);
    odd += an * power;
    prev2 = std::move(prev1);
    prev1 = std::move(an);
  }
  return (1L + f) * (even - odd);
}

}  // namespace

BigReal i2_reduced(const BigReal& f, const PrecisionContext& ctx) {
  if (f.sign() < 0 || f.to_double() > 0.4143) throw DomainError("i2_reduced expects f in [0, sqrt 2 - 1]");
  return i2_odd_series(f, ctx);
}

BigReal i2_direct_series(const BigReal& f, const PrecisionContext& ctx) {
  const BigReal x = f.with_precision(ctx.bits());
  if (!(abs(x) < 1L)) throw DomainError("i2_direct_series needs |f| < 1");
  if (!x.is_zero()) {
    const double terms = ctx.working_digits() * std::log(10.0) / (-2.0 * std::log(std::abs(x.to_double())));
    if (terms > 5e6) throw PrecisionError("i2_direct_series: |f| too close to 1 for the unreduced series");
  }
  // The even and odd parts both grow like log^2(1-f) near f = 1.
  const PrecisionContext wide(ctx.digits(), ctx.guard() + 10);
  return i2_odd_series(x.with_precision(wide.bits()), wide).with_precision(ctx.bits());
}

BigReal j_function(const BigReal& f, const PrecisionContext& ctx) {
  const BigReal x = f.with_precision(ctx.bits());
  if (!(abs(x) < 1L)) throw DomainError("J(f) needs |f| < 1");
  const BigReal m = agm(1L + x, 1L - x, ctx);
  const BigReal half_pi = ctx.pi() / 2L;
  return half_pi * half_pi / (m * m);
}

BigReal i2_eval(const BigReal& f, const PrecisionContext& ctx) {
  const BigReal x = f.with_precision(ctx.bits());
  if (x == -1L) throw PoleError("I2 has a pole at f = -1");
  const ReductionTrace trace = reduce_f(x, ctx);
  BigReal value = i2_reduced(trace.final_f, ctx);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    switch (it->kind) {
      case ReductionKind::Inverse:
        value = value / it->from;
        break;
      case ReductionKind::Involution:
        break;
      case ReductionKind::Negative:
        value = (1L + it->from) * (j_function(it->from, ctx) - value / (1L - it->from));
        break;
    }
  }
  return value;
}

BigReal i2_eval_checked(const BigReal& f, const PrecisionContext& ctx) {
  const BigReal first = i2_eval(f, ctx);
  const PrecisionContext wide = ctx.with_doubled_guard();
  const BigReal second = i2_eval(f, wide);
  if (abs(first - second) > ctx.tolerance() * abs(second)) {
    throw PrecisionError("I2 evaluation lost digits to cancellation; raise the precision");
  }
  return second.with_precision(ctx.bits());
}

BigReal i2_quadrature(const BigReal& f, int target_digits) {
  if (target_digits > 50) throw PrecisionError("the quadrature oracle supports at most 50 digits");
  const PrecisionContext ctx(std::max(target_digits, 10) + 5, 10);
  const BigReal x = f.with_precision(ctx.bits());
  if (!(abs(x) < 1L)) throw DomainError("the quadrature oracle needs |f| < 1");
  const TanhSinh ts(ctx);
  const BigReal one_plus = 1L + x;
  const BigReal c0 = one_plus * one_plus;
  const BigReal four_f = x * 4L;
  const BigReal tol = pow10(-(target_digits + 3), ctx.bits());
  const BigReal zero = ctx.real(0);
  auto inner = [&](const BigReal& beta, const BigReal&, const BigReal&) {
    const BigReal s = sin(beta);
    return 1L / sqrt(c0 - four_f * s * s);
  };
  auto outer = [&](const BigReal& alpha, const BigReal&, const BigReal&) {
    const BigReal c = cos(alpha);
    const QuadratureResult in = ts.integrate(inner, zero, alpha, tol);
    return in.value / sqrt(c0 - four_f * c * c);
  };
  const QuadratureResult out = ts.integrate(outer, zero, ctx.pi() / 2L, tol);
  if (!out.converged) throw PrecisionError("quadrature oracle did not converge");
  return one_plus * out.value;
}

Series<PiQuadratic> i2_series(int n_max) {
  if (n_max < 4) throw InsufficientOrderError("i2_series needs order at least 4");
  // 1/agm(1+f, 1-f) = sum ((1/2)_n/n!)^2 f^{2n}.
  std::vector<Rational> inv(static_cast<std::size_t>(n_max) + 1, Rational(0));
  for (int n = 0; 2 * n <= n_max; ++n) {
    Rational h = half_pochhammer_ratio(n);
    inv[static_cast<std::size_t>(2 * n)] = h * h;
  }
  const Series<Rational> inv_s(inv);
  const Series<Rational> inv_sq = inv_s * inv_s;
  const std::vector<Rational> a = a_coeffs(n_max / 2 + 1);
  std::vector<PiQuadratic> x;
  x.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    PiQuadratic c = PiQuadratic::pi_squared(inv_sq[static_cast<std::size_t>(n)] / 8);
    if (n % 2 == 1) c -= PiQuadratic(a[static_cast<std::size_t>(n / 2)]);
    x.push_back(c);
  }
  std::vector<PiQuadratic> out;
  out.reserve(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) out.push_back(n == 0 ? x[0] : x[n] + x[n - 1]);
  return Series<PiQuadratic>(std::move(out));
}

std::vector<Rational> t_coeffs(int n_max) {
  std::vector<Rational> t;
  t.reserve(static_cast<std::size_t>(n_max) + 1);
  t.emplace_back(0);
  for (int n = 0; n < n_max; ++n) {
    Rational next = (t.back() + half_pochhammer_ratio(n)) / 2;
    next.canonicalize();
    t.push_back(next);
  }
  return t;
}

std::vector<PiQuadratic> y_coeffs(int n_max) {
  const std::vector<Rational> t = t_coeffs(n_max);
  std::vector<PiQuadratic> s;
  s.reserve(static_cast<std::size_t>(n_max) + 1);
  s.push_back(PiQuadratic::pi_squared(ratio(1, 2)));
  for (long n = 0; n < n_max; ++n) {
    // (n+1)^3 S0(n+1)/4 = (2n+1)(2n^2+2n+1) S0(n)/8 - n^3 S0(n-1)/4 + n T(n)/2 - (1/2)_{n+1}/(2 n!)
    PiQuadratic rhs = s[static_cast<std::size_t>(n)] * ratio((2 * n + 1) * (2 * n * n + 2 * n + 1), 8);
    if (n >= 1) rhs -= s[static_cast<std::size_t>(n - 1)] * ratio(n * n * n, 4);
    Rational inhom = Rational(n) * t[static_cast<std::size_t>(n)] / 2 - pochhammer(ratio(1, 2), n + 1) / (2 * Rational(factorial(n)));
    rhs += PiQuadratic(inhom);
    s.push_back(rhs * ratio(4, (n + 1) * (n + 1) * (n + 1)));
  }
  return s;
}

Series<Rational> theorem2_rhs(int n_max) {
  std::vector<Rational> numerator(static_cast<std::size_t>(n_max) + 1, Rational(0));
  // -(4 - 4h - h^2) h
  if (n_max >= 1) numerator[1] = -4;
  if (n_max >= 2) numerator[2] = 4;
  if (n_max >= 3) numerator[3] = 1;
  std::vector<Rational> two_minus_h(static_cast<std::size_t>(n_max) + 1, Rational(0));
  two_minus_h[0] = 2;
  if (n_max >= 1) two_minus_h[1] = -1;
  std::vector<Rational> one_minus_h(static_cast<std::size_t>(n_max) + 1, Rational(0));
  one_minus_h[0] = 1;
  if (n_max >= 1) one_minus_h[1] = -1;
  const Series<Rational> inv_sq = power(Series<Rational>(two_minus_h), -2);
  const Series<Rational> inv_root = reciprocal(sqrt(Series<Rational>(one_minus_h)));
  return Series<Rational>(numerator) * inv_sq * inv_root;
}

Series<Rational> theorem1_rhs(int n_max) {
  std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
  c[0] = -1;
  for (int k = 0; 2 * k + 2 <= n_max; ++k) c[static_cast<std::size_t>(2 * k + 2)] = (k % 2 == 0 ? 8 : -8) * (k + 1);
  return Series<Rational>(std::move(c));
}

namespace {

SeriesResidual residual_of(const Series<PiQuadratic>& r, int order) {
  SeriesResidual out;
  out.order = order;
  for (int n = 0; n <= order; ++n) {
    const PiQuadratic& c = r[static_cast<std::size_t>(n)];
    if (c.pi2_part() != 0) out.pi2_part_zero = false;
    if (c.rational_part() != 0) out.rational_part_zero = false;
    if (!c.is_zero() && out.first_nonzero < 0) out.first_nonzero = n;
  }
  return out;
}

}  // namespace

SeriesResidual verify_theorem2(int n_max) {
  const Series<PiQuadratic> y(y_coeffs(n_max));
  const Series<PiQuadratic> t1 = theta_apply(y, 1);
  const Series<PiQuadratic> t2 = theta_apply(y, 2);
  const Series<PiQuadratic> t3 = theta_apply(y, 3);
  // (2t+1)(2t^2+2t+1) = 4t^3 + 6t^2 + 4t + 1 and (t+1)^3 = t^3 + 3t^2 + 3t + 1.
  const Series<PiQuadratic> p = t3.scaled(4) + t2.scaled(6) + t1.scaled(4) + y;
  const Series<PiQuadratic> q = t3 + t2.scaled(3) + t1.scaled(3) + y;
  const Series<PiQuadratic> lhs = t3 - p.shifted(1).scaled(ratio(1, 2)) + q.shifted(2);
  const Series<PiQuadratic> residual = lhs - convert<PiQuadratic>(theorem2_rhs(n_max));
  return residual_of(residual, n_max);
}

SeriesResidual verify_theorem1(int n_max) {
  const Series<PiQuadratic> l = apply_L(i2_series(n_max));
  const int order = n_max - 4;
  const Series<PiQuadratic> residual = l.truncated(order) - convert<PiQuadratic>(theorem1_rhs(order));
  return residual_of(residual, order);
}

}  // namespace magagm
