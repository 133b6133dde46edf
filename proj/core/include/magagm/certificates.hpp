#pragma once

#include <string>
#include <vector>

#include "magagm/pi_quadratic.hpp"
#include "magagm/precision.hpp"

namespace magagm {

// a(n;m,k) = (1/2)_m (1/2)_{n-m} (1/2)_k^2 / (n! (m+1/2)_{k+1} (n-m+1/2)_{k+1}).
Rational term_a(long n, long m, long k);
// (m + k + 1/2) a(n;m,k).
Rational term_a_tilde(long n, long m, long k);

// (n-m+1)^2 a(n+1;m,k) - (n-m+1/2)^2 a(n;m,k)
//   = (n-m+1/2)^2/(n+1) (a~(n;m,k+1) - a~(n;m,k)), exactly.
bool telescoping_certificate(long n, long m, long k);

enum class TailMethod { Bound, EulerMaclaurin };
std::string to_string(TailMethod method);

// A(n;m) = sum_k a(n;m,k) with the size of the neglected remainder.
struct AnmValue {
  BigReal value;
  BigReal tail_bound;
  long terms = 0;
  TailMethod method = TailMethod::Bound;
};

// Summed directly while a certified comparison bound on the remainder can
// reach the working epsilon within a few thousand terms; otherwise the tail
// is an Euler-Maclaurin expansion, whose error is bounded by the first
// omitted term because the summand is completely monotone in k.
// A(n;m) = 0 for m < 0 or m > n.
AnmValue a_nm(long n, long m, const PrecisionContext& ctx);

struct CertificateReport {
  std::string name;
  std::string grid;
  long checked = 0;
  long failures = 0;
  double worst_log10_residual = 0;  // -inf when every residual is exactly zero
  double worst_log10_bound = 0;
  bool passed = false;
};

// Every (n, m, k) with m <= n <= n_max, k <= k_max.
CertificateReport telescoping_grid(long n_max, long k_max);

struct R3Report {
  long n = 0, m = 0;
  BigReal lhs;
  Rational rhs;
  BigReal residual;
  BigReal bound;
  bool passed = false;
};

// m^2 A(n+1;m) - (m-1/2)^2 A(n;m-1) = -(1/2)_{n+1-m} (1/2)_m / (n+1)!.
R3Report verify_r3(long n, long m, const PrecisionContext& ctx);
CertificateReport verify_r3_grid(long n_max, const PrecisionContext& ctx);

// (n+1) R3(n, m) - (n-m+1/2) R3(n-1, m): right sides cancel exactly and the
// left combination vanishes numerically.
CertificateReport verify_shift_combination(long n_max, const PrecisionContext& ctx);

struct IRReport {
  long n = 0;
  bool exact = false;
  // The pi^2 parts satisfy the homogeneous recursion on their own.
  bool pi2_homogeneous = false;
};

// (n+1)^3 S0(n+1)/4 - (2n+1)(2n^2+2n+1) S0(n)/8 + n^3 S0(n-1)/4
//   = -(n+2)T(n+2) + (n+2)T(n+1)/2 + n T(n)/2 + (1/2)_{n+1}/(2(n+1)!).
IRReport verify_ir(long n);
CertificateReport verify_ir_grid(long n_max);

struct TRecursionReport {
  long n_max = 0;
  bool direct_matches_recursion = false;  // sum of c(n;m) vs 2T(n+1) - T(n) = (1/2)_n/n!
  bool generating_function = false;       // h/((2-h) sqrt(1-h))
  bool c_closed_form = false;             // c(n;m) = (-1)^m (1/2-m)_n / n!, n <= 20
  bool c_shift_identity = false;          // 2c(n+1;m) - c(n;m) = c(n+1;m) - c(n+1;m+1)
  bool pochhammer_step = false;           // (a)_{k+1} = (a)_k (a+k)
  bool passed() const {
    return direct_matches_recursion && generating_function && c_closed_form && c_shift_identity && pochhammer_step;
  }
};

// c(n;m) = (1/2)_m (1/2)_{n-m} / n!.
Rational c_nm(long n, long m);
// T(n) = sum_{m=1}^n c(n;m).
Rational t_direct(long n);
TRecursionReport verify_t_recursion(long n_max);

// S2(0..n_max) from S2(n+1) - S2(n) - (2n+1) S0(n)/4 = -T(n+1), S2(0) = 0.
std::vector<PiQuadratic> s2_from_recursion(long n_max);

struct MomentReport {
  long n_max = 0;
  double worst_s2 = 0;     // log10 max |S2 recursion - direct moment|
  double worst_s1 = 0;     // log10 max |S1 - n S0/2|
  double worst_s3 = 0;     // log10 max |S3 - 3n S2/2 + n^3 S0/4|
  double worst_bound = 0;  // log10 of the largest tail bound involved
  bool passed = false;
};

// Direct moments sum_m m^j A(n;m) against the recursion and the symmetry
// relations for n <= n_max.
MomentReport verify_moments(long n_max, const PrecisionContext& ctx);

struct Eq1Report {
  BigReal h;
  int digits = 0;
  BigReal direct;     // 2D quadrature of the (u, v) integral
  BigReal triple;     // sum_n h^n sum_m A(n;m)
  BigReal recursion;  // sum_n S0(n) h^n, S0 exact
  BigReal quadrature_error;
  BigReal series_tail;
  long series_terms = 0;
  double log10_max_spread = 0;
  bool passed = false;
};

// Y(h) three ways; agreement required to `digits` (at most 40).
Eq1Report verify_eq1_end_to_end(const BigReal& h, int digits);

// Y(h) = integral over 0<u<v<1 of du dv / sqrt(uv(1-u)(1-v)(1-uh)(1-(1-v)h)).
BigReal y_quadrature(const BigReal& h, int digits, BigReal* error_estimate = nullptr);

// [{identity, grid, checked, failures, worst_log10_residual, worst_log10_bound, passed}].
std::string certificate_report_json(const std::vector<CertificateReport>& reports);

}  // namespace magagm
