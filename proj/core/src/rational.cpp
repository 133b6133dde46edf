#include "magagm/rational.hpp"

#include <cstdio>

#include "magagm/errors.hpp"

namespace magagm {

Rational pochhammer(const Rational& a, long n) {
  Rational r = 1;
  for (long k = 0; k < n; ++k) r *= a + k;
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational half_pochhammer_ratio(long n) {
  // (1/2)_n/n! = (2n)! / (4^n n!^2)
  Rational r(Integer(1), Integer(1));
  for (long k = 1; k <= n; ++k) {
    r *= ratio(2 * k - 1, 2 * k);
  }
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<Rational> bernoulli_numbers(int count) {
  // Akiyama-Tanigawa.
  std::vector<Rational> out;
  std::vector<Rational> row(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    row[static_cast<std::size_t>(m)] = ratio(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto uj = static_cast<std::size_t>(j);
      row[uj - 1] = j * (row[uj - 1] - row[uj]);
    }
    out.push_back(row[0]);
  }
  if (count > 1) out[1] = ratio(-1, 2);
  return out;
}

std::optional<Rational> reconstruct_rational(const BigReal& x, const BigReal& tolerance, int max_total_digits) {
  Rational exact = x.to_rational();
  Integer num = exact.get_num();
  Integer den = exact.get_den();
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  const mpfr_prec_t bits = x.precision() + 64;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (decimal_digits(p1) + decimal_digits(q1) > max_total_digits) return std::nullopt;
    Rational candidate(p1, q1);
    candidate.canonicalize();
    BigReal err = abs(BigReal(Rational(exact - candidate), bits));
    if (err <= tolerance) return candidate;
    Integer r = num - a * den;
    num = den;
    den = r;
  }
  return std::nullopt;
}

std::vector<long> primes_up_to(long limit) {
  std::vector<long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (long k = p * p; k <= limit; k += p) composite[static_cast<std::size_t>(k)] = true;
  }
  return primes;
}

SmoothFactorization factor_smooth(const Integer& n, long bound) {
  if (n == 0) throw DomainError("cannot factor zero");
  SmoothFactorization out;
  Integer rest = abs(n);
  for (long p : primes_up_to(bound)) {
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e > 0) out.factors.push_back({Integer(p), e});
  }
  out.cofactor = rest;
  return out;
}

std::vector<std::pair<long, int>> factor_small(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int decimal_digits(const Integer& n) {
  // mpz_sizeinbase may overshoot by one for base 10.
  const Integer m = abs(n);
  int d = static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 10));
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(d - 1));
  return d > 1 && m < p ? d - 1 : d;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace magagm
