#pragma once

#include <string>
#include <vector>

#include "magagm/pi_quadratic.hpp"
#include "magagm/precision.hpp"
#include "magagm/series.hpp"

namespace magagm {

// Coefficients of the odd part of I2(f)/(1+f):
// (2n+1)^3 a_n = 4n(4n^2+1) a_{n-1} - (2n-1)^3 a_{n-2} + 8(-1)^n n, a_{-1} = 0, a_0 = 1.
std::vector<Rational> a_coeffs(int n_max);
// The same recursion in floating point; |a_n| <= 1 is observed and used as
// the tail constant.
std::vector<BigReal> a_coeffs_numeric(int n_max, const PrecisionContext& ctx);

enum class ReductionKind {
  // I2(f) = (1+f) [J(f) - I2(-f)/(1-f)] for -1 < f < 0.
  Negative,
  // I2(f) = I2(1/f)/f.
  Inverse,
  // I2(f) = I2((1-f)/(1+f)) for 0 <= f <= 1.
  Involution,
};

std::string to_string(ReductionKind kind);

struct ReductionStep {
  ReductionKind kind;
  BigReal from;  // argument before the map
  BigReal to;    // argument after the map
};

struct ReductionTrace {
  BigReal input_f;
  std::vector<ReductionStep> steps;
  BigReal final_f;  // in [0, sqrt(2) - 1]
};

// Maps any real f != -1 into [0, sqrt 2 - 1]. Throws PoleError at f = -1.
ReductionTrace reduce_f(const BigReal& f, const PrecisionContext& ctx);

// I2(f) for real f != -1 to ctx.digits() digits.
BigReal i2_eval(const BigReal& f, const PrecisionContext& ctx);

// i2_eval repeated with doubled guard digits; throws PrecisionError if the
// two runs disagree at the reporting tolerance.
BigReal i2_eval_checked(const BigReal& f, const PrecisionContext& ctx);

// I2 on the reduced interval [0, sqrt 2 - 1] by the AGM plus odd series.
BigReal i2_reduced(const BigReal& f, const PrecisionContext& ctx);

// The same series without any reduction, for |f| < 1. Its cost grows like
// 1/(1 - |f|); an independent route for checking the reduction maps.
BigReal i2_direct_series(const BigReal& f, const PrecisionContext& ctx);

// Nested tanh-sinh quadrature of the defining double integral for |f| < 1.
// Deliberately limited to 50 digits; throws PrecisionError above that.
BigReal i2_quadrature(const BigReal& f, int target_digits);

// J(f) = (pi/2)^2 / agm(1+f, 1-f)^2 for |f| < 1.
BigReal j_function(const BigReal& f, const PrecisionContext& ctx);

// Exact f-expansion of I2(f) through order n_max.
Series<PiQuadratic> i2_series(int n_max);

// T(0..n_max) from 2T(n+1) - T(n) = (1/2)_n/n!, T(0) = 0.
std::vector<Rational> t_coeffs(int n_max);
// S0(0..n_max), the h-expansion coefficients of
// Y(h) = integral over 0<u<v<1 of du dv / sqrt(uv(1-u)(1-v)(1-uh)(1-(1-v)h)).
std::vector<PiQuadratic> y_coeffs(int n_max);

// Y(h(f)) = kKappa (1+f) I2(f) with h(f) = 4f/(1+f)^2.
inline constexpr long kKappa = 4;

// Series of -(4-4h-h^2) h / ((2-h)^2 sqrt(1-h)).
Series<Rational> theorem2_rhs(int n_max);

struct SeriesResidual {
  int order = 0;
  // Index of the first nonzero residual coefficient, or -1.
  int first_nonzero = -1;
  // Separate checks of the pi^2 parts and the rational parts.
  bool pi2_part_zero = true;
  bool rational_part_zero = true;
  bool zero() const { return first_nonzero < 0; }
};

// Applies theta^3 - h(2theta+1)(2theta^2+2theta+1)/2 + h^2(theta+1)^3 to
// Y(h) and subtracts theorem2_rhs.
SeriesResidual verify_theorem2(int n_max);

// apply_L(i2_series(n_max)) minus the expansion of 2(2f/(1+f^2))^2 - 1,
// compared through order n_max - 4.
SeriesResidual verify_theorem1(int n_max);

// Expansion of 2(2f/(1+f^2))^2 - 1 through order n_max.
Series<Rational> theorem1_rhs(int n_max);

}  // namespace magagm
