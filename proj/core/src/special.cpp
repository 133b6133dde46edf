#include "magagm/special.hpp"

#include "magagm/errors.hpp"

namespace magagm {

BigReal agm(const BigReal& a0, const BigReal& b0, const PrecisionContext& ctx) {
  if (a0.sign() <= 0 || b0.sign() <= 0) throw DomainError("agm requires positive arguments");
  BigReal a = a0.with_precision(ctx.bits());
  BigReal b = b0.with_precision(ctx.bits());
  const BigReal eps = ctx.epsilon();
  // Quadratic convergence: the bound on iterations is generous.
  for (int i = 0; i < 100000; ++i) {
    if (abs(a - b) <= eps * a) break;
    BigReal next_a = (a + b) / 2L;
    b = sqrt(a * b);
    a = std::move(next_a);
  }
  return (a + b) / 2L;
}

BigReal elliptic_i1(const BigReal& f, const PrecisionContext& ctx) {
  if (f.sign() <= 0) throw DomainError("elliptic_i1 requires f > 0");
  return ctx.pi() / (2L * agm(ctx.real(1), f, ctx));
}

BigReal gamma_quarter(const PrecisionContext& ctx) {
  BigReal two_pi = 2L * ctx.pi();
  BigReal m = agm(ctx.real(1), sqrt(ctx.real(2)), ctx);
  return sqrt(two_pi * sqrt(two_pi) / m);
}

BigReal gamma_rational(const Rational& x, const PrecisionContext& ctx) {
  if (x <= 0) throw DomainError("gamma_rational requires x > 0");
  BigReal xr(x, ctx.bits() + 32);
  BigReal r(ctx.bits());
  mpfr_gamma(r.get(), xr.get(), MPFR_RNDN);
  return r;
}

BigReal nome_from_f(const BigReal& f, const PrecisionContext& ctx) {
  if (f.sign() <= 0 || f >= 1L) throw DomainError("nome_from_f requires 0 < f < 1");
  BigReal one = ctx.real(1);
  BigReal ratio = agm(one + f, one - f, ctx) / agm(one, f, ctx);
  return exp(-ctx.pi() * ratio);
}

BigReal inverse_agm_series(const BigReal& f, int terms, const PrecisionContext& ctx) {
  BigReal f2 = f * f;
  BigReal term = ctx.real(1);
  BigReal sum = term;
  for (long n = 1; n < terms; ++n) {
    // ((1/2)_n/n!)^2 = ((1/2)_{n-1}/(n-1)!)^2 * ((2n-1)/(2n))^2
    term *= f2;
    term *= (2 * n - 1) * (2 * n - 1);
    term /= 4 * n * n;
    sum += term;
  }
  return sum;
}

}  // namespace magagm
