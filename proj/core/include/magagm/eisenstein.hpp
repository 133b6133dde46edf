#pragma once

#include <array>
#include <map>
#include <set>
#include <string>

#include "magagm/precision.hpp"
#include "magagm/series.hpp"

namespace magagm {

// Polynomial with rational coefficients in the weight 2, 4, 6 Eisenstein
// series L, M, N.
class EisensteinPoly {
 public:
  using Monomial = std::array<int, 3>;  // exponents of L, M, N

  EisensteinPoly() = default;
  static EisensteinPoly constant(const Rational& c);
  static EisensteinPoly L();
  static EisensteinPoly M();
  static EisensteinPoly N();

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Weights 2i + 4j + 6k of the monomials present.
  std::set<int> weights() const;

  EisensteinPoly& operator+=(const EisensteinPoly& o);
  EisensteinPoly& operator-=(const EisensteinPoly& o);
  EisensteinPoly& operator*=(const Rational& c);
  friend EisensteinPoly operator+(EisensteinPoly a, const EisensteinPoly& b) { return a += b; }
  friend EisensteinPoly operator-(EisensteinPoly a, const EisensteinPoly& b) { return a -= b; }
  friend EisensteinPoly operator*(const EisensteinPoly& a, const EisensteinPoly& b);
  friend EisensteinPoly operator*(EisensteinPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const EisensteinPoly& a, const EisensteinPoly& b) { return a.terms_ == b.terms_; }

  template <typename T>
  T evaluate(const T& l, const T& m, const T& n, const T& one) const {
    T acc = one * 0L;
    for (const auto& [mono, c] : terms_) {
      T term = one;
      for (int i = 0; i < mono[0]; ++i) term = term * l;
      for (int i = 0; i < mono[1]; ++i) term = term * m;
      for (int i = 0; i < mono[2]; ++i) term = term * n;
      acc = acc + term * c;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// q d/dq via L' = (L^2 - M)/12, M' = (LM - N)/3, N' = (LN - M^2)/2.
EisensteinPoly ramanujan_derive(const EisensteinPoly& p);

enum class Eisenstein { L, M, N };

// Exact q-expansion through order n_max from divisor sums.
Series<Integer> eisenstein_qexp(Eisenstein which, int n_max);

// Substitutes the q-expansions of L, M, N into p.
Series<Rational> evaluate_qexp(const EisensteinPoly& p, int n_max);

struct EisensteinValues {
  BigReal L, M, N;
};

struct EisensteinAtQ0 {
  // Closed forms at q0 = -exp(-pi) (level 1) and q0^2 (level 2).
  EisensteinValues level1, level2;
  // The same values from the Lambert series summed at q0 and q0^2.
  EisensteinValues level1_sum, level2_sum;
  BigReal max_discrepancy;
};

// L(q0) = 6/pi, M(q0) = -3 Gamma(1/4)^8/(16 pi^6), N(q0) = 0;
// L(q0^2) = 3/pi, M(q0^2) = -M(q0)/4, N(q0^2) = 0.
EisensteinAtQ0 eisenstein_at_q0(const PrecisionContext& ctx);

// Lambert-series value of L, M or N at a real |q| < 1.
BigReal eisenstein_sum(Eisenstein which, const BigReal& q, const PrecisionContext& ctx);

}  // namespace magagm
