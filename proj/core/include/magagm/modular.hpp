#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magagm/errors.hpp"
#include "magagm/precision.hpp"
#include "magagm/qsqrt2.hpp"
#include "magagm/series.hpp"

namespace magagm {

// Formal product of eta_m = q^{m/24} prod (1 - q^{mk}) powers.
struct EtaQuotient {
  std::vector<std::pair<int, int>> factors;  // (level, exponent)

  Rational prefactor() const;
  // Integer expansion of the product part through order n_max; the result
  // carries prefactor() as its fractional exponent.
  Series<Integer> qexp(int n_max) const;
  BigComplex eval(const BigComplex& tau, const PrecisionContext& ctx) const;
};

// eta_m / q^{m/24} through order n_max, with prefactor exponent m/24.
Series<Integer> eta_qexp(int level, int n_max);

// f^2 = 16 (eta1 eta4^2 / eta2^3)^8 as an integer q-series through order
// n_max. Throws ConsistencyError unless it equals 1 - (eta1^2 eta4/eta2^3)^8.
Series<Integer> f_squared_qexp(int n_max);

// psi = 64 (eta2/eta1)^24 as an integer q-series through order n_max.
Series<Integer> psi_qexp(int n_max);

// eta(level * tau) including the q^{level/24} factor, by the pentagonal
// number series at q = exp(2 pi i tau). Needs Im tau > 0.
BigComplex eta_eval(int level, const BigComplex& tau, const PrecisionContext& ctx);

BigComplex psi_eval(const BigComplex& tau, const PrecisionContext& ctx);

// j = 64 (1 + 4 psi)^3 / psi, exact for exact psi. Throws PoleError at psi = 0.
Rational j_invariant(const Rational& psi);
QSqrt2 j_invariant(const QSqrt2& psi);
BigReal j_invariant(const BigReal& psi);
BigComplex j_invariant(const BigComplex& psi);

struct FourierTable {
  // A(0..truncation). Non-integral entries hold the truncated quotient and
  // are listed in `violations`.
  std::vector<Integer> A;
  int truncation = 0;
  std::vector<int> violations;
  bool integral() const { return violations.empty(); }
};

// Fourier coefficients of phi = (eta1 eta2)^4 (psi - 1)/(2 (psi + 1)) =
// -sum (n + 1/2) A(n) q^{n+1/2}, computed in exact integer arithmetic.
FourierTable phi_qexp(int n_max);

std::string fourier_table_csv(const FourierTable& table);
std::string fourier_table_json(const FourierTable& table);
// FNV-1a hash of the CSV rendering.
std::string fourier_table_checksum(const FourierTable& table);

// phi(tau) pointwise. Throws PoleError when |64 eta2^24 + eta1^24| falls
// below 10^{-digits/2} of its scale.
BigComplex phi_eval(const BigComplex& tau, const PrecisionContext& ctx);

struct Lemma2Report {
  BigComplex tau;
  BigReal shift_residual;      // |phi(tau+1) + phi(tau)| / |phi(tau)|
  BigReal inversion_residual;  // |phi(-1/(2tau)) / (4 tau^4) + phi(tau)| / |phi(tau)|
  bool passed = false;
};

// Checks phi(tau+1) = -phi(tau) = phi(-1/(2 tau)) / (4 tau^4) at the
// reporting tolerance of ctx.
Lemma2Report verify_lemma2(const BigComplex& tau, const PrecisionContext& ctx);

struct CMRecord {
  int k = 0;
  QSqrt2 psi;
  // f_k = (sqrt(1 + psi_k) - 1)/sqrt(psi_k) when it lies in Q(sqrt 2).
  std::optional<QSqrt2> f;
  QSqrt2 R;  // (psi - 1)/(psi + 1) = 2 (2f/(1+f^2))^2 - 1

  // psi_k = psi(2^{(k-1)/2} i).
  BigComplex tau(const PrecisionContext& ctx) const;
  BigReal f_value(const PrecisionContext& ctx) const;
};

// The seven CM points k = -3..3 with psi in Q(sqrt 2).
std::vector<CMRecord> cm_table();

// R(f) = 2 (2f/(1+f^2))^2 - 1.
QSqrt2 r_of_f(const QSqrt2& f);

struct TripleSum {
  BigReal value;       // pi^2/8 - sum A(n) q^{n+1/2}/(n+1/2)^2
  BigReal tail_bound;  // modelled from |A(n)| ~ e^{(n+1/2) pi}/2
  bool sufficient = false;
};

TripleSum triple_sum_eval(const BigReal& q, const FourierTable& table, const PrecisionContext& ctx);

}  // namespace magagm
