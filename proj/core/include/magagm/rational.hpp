#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magagm/precision.hpp"

namespace magagm {

// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, long n);
Integer factorial(long n);
// (1/2)_n / n!
Rational half_pochhammer_ratio(long n);
Integer binomial(long n, long k);

// Bernoulli numbers B_0 .. B_{count-1} (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int count);

// Smallest-denominator continued-fraction convergent p/q of x with
// |x - p/q| <= tolerance, provided p and q together need at most
// `max_total_digits` decimal digits. The expansion runs on the exact binary
// value of x, so no rounding enters the reconstruction itself.
std::optional<Rational> reconstruct_rational(const BigReal& x, const BigReal& tolerance, int max_total_digits);

struct PrimeFactor {
  Integer prime;
  int exponent;
};

// Trial division by every prime <= bound. `cofactor` is what remains
// (1 when n is bound-smooth).
struct SmoothFactorization {
  std::vector<PrimeFactor> factors;
  Integer cofactor;
};
SmoothFactorization factor_smooth(const Integer& n, long bound);

std::vector<long> primes_up_to(long limit);
// Distinct prime factorisation of a machine integer by trial division.
std::vector<std::pair<long, int>> factor_small(long n);

int decimal_digits(const Integer& n);

// 64-bit FNV-1a hash rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace magagm
