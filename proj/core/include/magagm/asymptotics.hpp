#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magagm/modular.hpp"
#include "magagm/precision.hpp"

namespace magagm {

// E(x) = ((x - 1)/x) e^x.
BigReal e_function(const BigReal& x);

// True for 1 and for integers whose prime factors are all 1 mod 4.
bool in_s(long m);
// Members of that sequence up to `limit`, ascending.
std::vector<long> s_sequence(long limit);

struct SquareDecomposition {
  long gamma;  // odd, positive
  long delta;  // positive
};

// All m = gamma^2 + delta^2 with gcd(gamma, delta) = 1, gamma odd. There are
// 2^{omega-1} of them. Throws DomainError for m not in the sequence or m = 1.
std::vector<SquareDecomposition> coprime_square_decompositions(long m);

// Image (w + i)/(2m) of the pole (1+i)/2 under tau -> (a tau + b)/(c tau + d).
struct SingularityDatum {
  long m = 0;
  long gamma = 0;
  long delta = 0;  // signed
  long a = 0, b = 0, c = 0, d = 0;
  long w = 0;
  long r = 0;  // (m - w)/2
};

// c = 2 gamma, d = delta - gamma, a the odd inverse of d modulo c in (0, c),
// b = (ad - 1)/c, w = (a+b)(c+d) + bd. Returns the datum only when w is odd
// and 0 < w < m. Throws DomainError when gcd(c, d) != 1.
std::optional<SingularityDatum> locate_singularity(long gamma, long delta);

// Exact check that (d tau - b)/(-c tau + a) sends (w+i)/(2m) to (1+i)/2.
bool maps_to_base_pole(const SingularityDatum& s);

struct SingularitySet {
  long m = 0;
  std::vector<SingularityDatum> data;
  // Decompositions for which the number of accepted signs was not one.
  std::vector<SquareDecomposition> violations;
};

SingularitySet singularities(long m);

struct ROfM {
  long m = 0;
  long r = 0;
  bool found = false;
  std::vector<long> r_j;
  SingularitySet set;
};

// r(m) for m in the sequence, m > 1: (m - w)/2 for a single prime power,
// otherwise the smallest r < m/2 satisfying the cosine-product identity.
ROfM r_of_m(long m);

struct CosineCheck {
  long m = 0;
  long r = 0;
  bool exact = false;    // residue-multiset comparison
  bool numeric = false;  // evaluated over a period, when requested
  bool numeric_run = false;
  double max_residual = 0;
};

// mu prod_k cos((2n+1-m) r pi/q_k) = sum_j cos((2n+1-m) r_j pi/m) for all n.
CosineCheck cosine_identity_check(long m, const PrecisionContext* numeric_ctx = nullptr);

// r(m) for every m in the sequence up to m_max.
struct AsymptoticModel {
  long m_max = 1;
  std::map<long, long> r;

  static AsymptoticModel build(long m_max);
};

// C(m, n) of the conjectured expansion: 1 for m = 1, 0 off the sequence.
BigReal c_coeff(long m, long n, const AsymptoticModel& model, const PrecisionContext& ctx);
// Same with an explicit r.
BigReal c_coeff_with_r(long m, long n, long r, const PrecisionContext& ctx);

struct ResidualRow {
  long n = 0;
  double log10_abs_residual = 0;
  double log10_abs_target = 0;
  double coverage = 0;  // fraction of digits of 2A(n) explained, in [0, 1]
};

struct ResidualScan {
  long n1 = 0, n2 = 0, m_max = 1;
  long next_m = 0;  // next member of the sequence after m_max
  std::vector<ResidualRow> rows;
  double mean_coverage = 0;
  // Growth rate of log|rho(n)| per unit n, fitted on block maxima, and the
  // prediction pi / next_m.
  double decay_slope = 0;
  double predicted_slope = 0;
};

// rho(n) = 2(-1)^n A(n) - sum_{m <= m_max} C(m,n) E((2n+1) pi/(2m)).
ResidualScan residual_scan(const FourierTable& table, long n1, long n2, long m_max);

std::string residual_scan_csv(const ResidualScan& scan);

struct CoefficientFit {
  long m = 0;
  // Least-squares C(m, n) per residue class n mod m.
  std::vector<double> estimate;
  // C(m, n) from the algorithmic r(m), when m is in the sequence.
  std::vector<double> predicted;
  long best_r = 0;          // r minimising the fit error (0 when m = 1 or m is off the sequence)
  double max_abs_error = 0;  // |estimate - predicted| over classes
  double max_abs_estimate = 0;
};

// Subtracts every sequence term below m and fits the coefficient of
// E((2n+1) pi/(2m)) separately in each residue class of n mod m.
CoefficientFit fit_unknown_c(const FourierTable& table, long n1, long n2, long m);

// JSON report {m, r, w, matrices, verified} for each m.
std::string singularity_report_json(const std::vector<ROfM>& results, const std::vector<CosineCheck>& checks);

}  // namespace magagm
