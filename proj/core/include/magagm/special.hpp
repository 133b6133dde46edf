#pragma once

#include "magagm/precision.hpp"

namespace magagm {

// Arithmetic-geometric mean of two positive reals. Iterates until
// |a - b| <= 10^-(digits+guard) * a, a relative criterion so that tiny
// operands converge as quickly as unit-sized ones.
BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);

// I1(f) = integral_0^{pi/2} d(alpha) / sqrt(cos^2 + f^2 sin^2) = pi / (2 agm(1, f)).
BigReal elliptic_i1(const BigReal& f, const PrecisionContext& ctx);

// Gamma(1/4) from Gamma(1/4)^2 = (2 pi)^{3/2} / agm(1, sqrt 2).
BigReal gamma_quarter(const PrecisionContext& ctx);

// Gamma(x) for rational x > 0. Independent of gamma_quarter: evaluated with
// MPFR's correctly rounded gamma function.
BigReal gamma_rational(const Rational& x, const PrecisionContext& ctx);

// Nome q = exp(-pi agm(1+f, 1-f) / agm(1, f)) for 0 < f < 1.
BigReal nome_from_f(const BigReal& f, const PrecisionContext& ctx);

// 1/agm(1+f, 1-f) as the hypergeometric series sum ((1/2)_n / n!)^2 f^{2n},
// truncated after `terms` terms. Used to cross-check the AGM route.
BigReal inverse_agm_series(const BigReal& f, int terms, const PrecisionContext& ctx);

}  // namespace magagm
