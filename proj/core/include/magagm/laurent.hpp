#pragma once

#include <string>
#include <vector>

#include "magagm/precision.hpp"

namespace magagm {

// phi(tau) = -i / (8 pi^2 (tau - t+)^2 (tau - t-)^2) (1 - 2 sum c_n (-4 D z^4)^n)
// with z = (tau - t+)/(tau - t-), t+ = (1+i)/2.
struct LaurentResult {
  BigReal D;
  std::vector<Rational> c;  // c[n-1] = c_n
  int achieved_order = 0;   // order in z of the Taylor data behind c
  int digits = 0;           // precision P of the accepted run; confirmed at 2P
  // log10 of the largest z^j coefficient with j not divisible by 4, relative
  // to the scale (4D)^{j/4} of its neighbours; should sit near -P.
  double off_pattern_log10 = 0;
  // log10 |G_0 - 1| for the normalised leading coefficient.
  double leading_log10 = 0;
  // Decimal digits lost to cancellation, per n, measured from the P / 2P pair.
  std::vector<double> digits_lost;
};

// Taylor order in z needed to resolve c_1..c_{n_max}.
int laurent_order_for(int n_max);

// Builds the Taylor data from Ramanujan's system at q0 = -exp(-pi) to order
// K (even, >= 8) and extracts c_n for 4n + 4 <= K by rational reconstruction,
// each confirmed by an independent reconstruction at twice the precision.
// digits = 0 selects 40 + 10 n_max; precision doubles until every c_n is
// confirmed. Throws PrecisionError past `max_digits`.
LaurentResult phi_laurent(int K, int digits = 0, int max_digits = 20000);

// D = pi^4 / (4 agm(1, sqrt 2)^8).
BigReal laurent_d(const PrecisionContext& ctx);

struct CnPropertyRow {
  int n = 0;
  bool a = false;  // positive ratio of odd integers
  bool b = false;  // no prime above 4n+1 divides the denominator
  bool c = false;  // den((4n+5)! c_n) squarefree, primes p < n with p = 1 mod 4
  std::string detail;
};

struct CnPropertyReport {
  std::vector<CnPropertyRow> rows;
  bool passed = false;
};

CnPropertyReport cn_properties(const LaurentResult& result, int n_max);

struct CnAsymptoticRow {
  int n = 0;
  double deviation = 0;  // c_n D^n / (8n - 6) - 1
  double envelope = 0;   // |deviation| / (5/8)^{2n}
};

struct CnAsymptoticReport {
  std::vector<CnAsymptoticRow> rows;
  int n_from = 10;
  double max_envelope = 0;  // over n >= n_from
  int sign_changes = 0;     // over n >= n_from
  bool passed = false;      // max_envelope <= 10
};

CnAsymptoticReport cn_asymptotic_check(const LaurentResult& result, int n_from = 10);

struct SumRuleReport {
  int n_exact = 0;
  int target_digits = 0;
  BigReal lhs;
  BigReal tail;        // modelled contribution of n > n_exact
  double log10_deviation = 0;
  double log10_model_error = 0;  // bound on the tail model error
  bool passed = false;
};

// 2 sum c_n D^n (2 - sqrt 2)^{4n} = 1 using exact c_n for n <= n_exact and,
// when include_tail, c_n = (8n-6)/D^n beyond.
SumRuleReport sum_rule_check(const LaurentResult& result, int target_digits, int n_exact = -1,
                             bool include_tail = true);

// {D, digits, achieved_order, c: [{n, numerator, denominator}]}.
std::string laurent_json(const LaurentResult& result);
std::string cn_properties_json(const CnPropertyReport& report);

}  // namespace magagm
