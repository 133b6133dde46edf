#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "magagm/errors.hpp"
#include "magagm/pi_quadratic.hpp"
#include "magagm/precision.hpp"

namespace magagm {

// Coefficient-ring hooks. Every supported domain (Integer, Rational,
// PiQuadratic, BigReal, BigComplex) provides these overloads.
namespace ring {

inline Integer zero_like(const Integer&) { return 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline PiQuadratic zero_like(const PiQuadratic&) { return {}; }
inline BigReal zero_like(const BigReal& x) { return BigReal(x.precision()); }
inline BigComplex zero_like(const BigComplex& x) { return {BigReal(x.precision()), BigReal(x.precision())}; }

inline Integer one_like(const Integer&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }
inline PiQuadratic one_like(const PiQuadratic&) { return PiQuadratic(1L); }
inline BigReal one_like(const BigReal& x) { return BigReal(1L, x.precision()); }
inline BigComplex one_like(const BigComplex& x) { return {BigReal(1L, x.precision()), BigReal(x.precision())}; }

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const PiQuadratic& x) { return x.is_zero(); }
inline bool is_zero(const BigReal& x) { return x.is_zero(); }
inline bool is_zero(const BigComplex& x) { return x.is_zero(); }

// x * c for rational c. Integer coefficients only accept integral products.
Integer scale(const Integer& x, const Rational& c);
inline Rational scale(const Rational& x, const Rational& c) { return x * c; }
inline PiQuadratic scale(const PiQuadratic& x, const Rational& c) { return x * c; }
inline BigReal scale(const BigReal& x, const Rational& c) { return x * c; }
inline BigComplex scale(const BigComplex& x, const Rational& c) { return {x.re() * c, x.im() * c}; }

// x / n where the quotient is known to lie in the ring.
Integer divide_exact(const Integer& x, const Integer& n);
inline Rational divide_exact(const Rational& x, const Rational& n) { return x / n; }
inline BigReal divide_exact(const BigReal& x, const BigReal& n) { return x / n; }
inline BigComplex divide_exact(const BigComplex& x, const BigComplex& n) { return x / n; }

inline Integer from_long(const Integer&, long v) { return v; }
inline Rational from_long(const Rational&, long v) { return v; }
inline BigReal from_long(const BigReal& like, long v) { return BigReal(v, like.precision()); }
inline BigComplex from_long(const BigComplex& like, long v) {
  return {BigReal(v, like.precision()), BigReal(like.precision())};
}

template <typename T>
inline constexpr bool is_karatsuba_ring =
    std::is_same_v<T, Integer> || std::is_same_v<T, Rational> || std::is_same_v<T, BigReal>;

}  // namespace ring

// Truncated power series  x^prefactor * (c_0 + c_1 x + ... + c_N x^N).
//
// The truncation order N is explicit state: binary operations truncate to
// the smaller order, shifting by x^k moves it, and no operation ever reads a
// coefficient beyond it. The fractional prefactor is kept apart from the
// integer-indexed coefficients (q^{1/2}-type expansions).
template <typename T>
class Series {
 public:
  Series() : coeffs_(1, T{}) {}
  explicit Series(std::vector<T> coeffs, Rational prefactor = 0)
      : coeffs_(std::move(coeffs)), prefactor_(std::move(prefactor)) {
    if (coeffs_.empty()) throw InsufficientOrderError("series needs at least one coefficient");
  }

  static Series zero(int order, const T& like = T{}) {
    return Series(std::vector<T>(static_cast<std::size_t>(order) + 1, ring::zero_like(like)));
  }
  static Series one(int order, const T& like = T{}) {
    Series s = zero(order, like);
    s.coeffs_[0] = ring::one_like(like);
    return s;
  }
  // c * x^power, truncated at `order`.
  static Series monomial(int power, int order, T c) {
    Series s = zero(order, c);
    if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const T& operator[](std::size_t n) const { return coeffs_[n]; }
  T& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const Rational& prefactor() const { return prefactor_; }

  Series truncated(int order) const {
    if (order > this->order()) throw InsufficientOrderError("cannot extend a truncated series");
    return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1), prefactor_);
  }

  // Multiply by x^k. For k < 0 the dropped leading coefficients must vanish.
  Series shifted(int k) const {
    if (k >= 0) {
      std::vector<T> c(static_cast<std::size_t>(k), ring::zero_like(coeffs_[0]));
      c.insert(c.end(), coeffs_.begin(), coeffs_.end());
      return Series(std::move(c), prefactor_);
    }
    const auto drop = static_cast<std::size_t>(-k);
    if (drop >= coeffs_.size()) throw InsufficientOrderError("shift exhausts the series");
    for (std::size_t i = 0; i < drop; ++i) {
      if (!ring::is_zero(coeffs_[i])) throw DomainError("division by x^k of a series with a nonzero low-order term");
    }
    return Series(std::vector<T>(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end()), prefactor_);
  }

  Series with_prefactor(Rational p) const { return Series(coeffs_, std::move(p)); }

  Series& operator+=(const Series& o) {
    combine(o, [](T& a, const T& b) { a += b; });
    return *this;
  }
  Series& operator-=(const Series& o) {
    combine(o, [](T& a, const T& b) { a -= b; });
    return *this;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Series scaled(const Rational& c) const {
    Series r = *this;
    for (auto& x : r.coeffs_) x = ring::scale(x, c);
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.prefactor_ == b.prefactor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  template <typename Op>
  void combine(const Series& o, Op op) {
    if (prefactor_ != o.prefactor_) throw DomainError("adding series with different prefactor exponents");
    const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) op(coeffs_[i], o.coeffs_[i]);
  }

  std::vector<T> coeffs_;
  Rational prefactor_ = 0;
};

template <typename T>
Series<T> operator+(Series<T> a, const Series<T>& b) { return a += b; }
template <typename T>
Series<T> operator-(Series<T> a, const Series<T>& b) { return a -= b; }

template <typename To, typename From>
Series<To> convert(const Series<From>& s) {
  std::vector<To> c;
  c.reserve(s.size());
  for (const auto& x : s.coeffs()) c.push_back(To(x));
  return Series<To>(std::move(c), s.prefactor());
}

// Exponent sum of a product of two series.
Rational add_prefactors(const Rational& a, const Rational& b);

// Cauchy product truncated to the smaller order; schoolbook O(N^2).
// Works for mixed rings when A * B yields A (PiQuadratic * Rational, ...).
template <typename A, typename B>
Series<A> multiply_schoolbook(const Series<A>& a, const Series<B>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<A> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    A acc = ring::zero_like(a[0]);
    for (int i = 0; i <= k; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(k - i);
      if (ring::is_zero(a[ui]) || ring::is_zero(b[uj])) continue;
      acc += a[ui] * b[uj];
    }
    c.push_back(std::move(acc));
  }
  return Series<A>(std::move(c), add_prefactors(a.prefactor(), b.prefactor()));
}

namespace detail {

template <typename T>
void karatsuba_full(const T* a, const T* b, std::size_t n, T* out, const T& zero) {
  // out has 2n-1 entries, all initialised to zero by the caller.
  constexpr std::size_t kBase = 24;
  if (n <= kBase) {
    for (std::size_t i = 0; i < n; ++i) {
      if (ring::is_zero(a[i])) continue;
      for (std::size_t j = 0; j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  std::vector<T> a_sum(hi, zero), b_sum(hi, zero);
  for (std::size_t i = 0; i < hi; ++i) {
    a_sum[i] = a[lo + i];
    b_sum[i] = b[lo + i];
    if (i < lo) {
      a_sum[i] += a[i];
      b_sum[i] += b[i];
    }
  }
  std::vector<T> low(2 * lo - 1, zero), high(2 * hi - 1, zero), mid(2 * hi - 1, zero);
  karatsuba_full(a, b, lo, low.data(), zero);
  karatsuba_full(a + lo, b + lo, hi, high.data(), zero);
  karatsuba_full(a_sum.data(), b_sum.data(), hi, mid.data(), zero);
  for (std::size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];
  for (std::size_t i = 0; i < low.size(); ++i) out[i] += low[i];
  for (std::size_t i = 0; i < mid.size(); ++i) out[lo + i] += mid[i];
  for (std::size_t i = 0; i < high.size(); ++i) out[2 * lo + i] += high[i];
}

}  // namespace detail

// Karatsuba product; bit-exact with the schoolbook product on exact rings.
template <typename T>
Series<T> multiply_karatsuba(const Series<T>& a, const Series<T>& b) {
  const std::size_t n = static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
  const T zero = ring::zero_like(a[0]);
  std::vector<T> full(2 * n - 1, zero);
  detail::karatsuba_full(a.coeffs().data(), b.coeffs().data(), n, full.data(), zero);
  full.resize(n);
  return Series<T>(std::move(full), add_prefactors(a.prefactor(), b.prefactor()));
}

inline constexpr int kKaratsubaThreshold = 64;

template <typename T>
Series<T> multiply(const Series<T>& a, const Series<T>& b) {
  if constexpr (ring::is_karatsuba_ring<T>) {
    if (std::min(a.order(), b.order()) + 1 >= kKaratsubaThreshold) return multiply_karatsuba(a, b);
  }
  return multiply_schoolbook(a, b);
}

template <typename T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) { return multiply(a, b); }

// 1/a. The constant term must be invertible in the ring.
template <typename T>
Series<T> reciprocal(const Series<T>& a) {
  if (ring::is_zero(a[0])) throw SingularSeriesError("reciprocal of a series with zero constant term");
  const T one = ring::one_like(a[0]);
  const T inv0 = ring::divide_exact(one, a[0]);
  std::vector<T> b;
  b.reserve(a.size());
  b.push_back(inv0);
  for (int n = 1; n <= a.order(); ++n) {
    T acc = ring::zero_like(a[0]);
    for (int i = 1; i <= n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ring::is_zero(a[ui])) continue;
      acc += a[ui] * b[static_cast<std::size_t>(n - i)];
    }
    b.push_back(-(acc * inv0));
  }
  return Series<T>(std::move(b), -a.prefactor());
}

// a^e for integer e (negative allowed) via the J.C.P. Miller recurrence,
// n a_0 b_n = sum_{k=1}^{n} ((e+1)k - n) a_k b_{n-k}.
template <typename T>
Series<T> power(const Series<T>& a, long e) {
  if (ring::is_zero(a[0])) throw SingularSeriesError("power of a series with zero constant term");
  const T one = ring::one_like(a[0]);
  T b0 = one;
  if (e >= 0) {
    for (long i = 0; i < e; ++i) b0 = b0 * a[0];
  } else {
    T inv = ring::divide_exact(one, a[0]);
    for (long i = 0; i < -e; ++i) b0 = b0 * inv;
  }
  std::vector<T> b;
  b.reserve(a.size());
  b.push_back(b0);
  for (long n = 1; n <= a.order(); ++n) {
    T acc = ring::zero_like(a[0]);
    for (long k = 1; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (ring::is_zero(a[uk])) continue;
      const long w = (e + 1) * k - n;
      if (w == 0) continue;
      T term = a[uk] * b[static_cast<std::size_t>(n - k)];
      acc += ring::from_long(a[0], w) * term;
    }
    T denom = ring::from_long(a[0], n) * a[0];
    b.push_back(ring::divide_exact(acc, denom));
  }
  return Series<T>(std::move(b), a.prefactor() * e);
}

// Square root with the given constant term's root (the caller picks the
// branch; for exact rings `root0` must square to a_0).
template <typename T>
Series<T> sqrt_with_root(const Series<T>& a, const T& root0) {
  if (ring::is_zero(a[0])) throw SingularSeriesError("square root of a series with zero constant term");
  std::vector<T> b;
  b.reserve(a.size());
  b.push_back(root0);
  const T two_root = ring::from_long(a[0], 2) * root0;
  for (int n = 1; n <= a.order(); ++n) {
    T acc = a[static_cast<std::size_t>(n)];
    for (int i = 1; i < n; ++i) acc -= b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
    b.push_back(ring::divide_exact(acc, two_root));
  }
  return Series<T>(std::move(b), a.prefactor() / 2);
}

Series<Rational> sqrt(const Series<Rational>& a);
Series<BigReal> sqrt(const Series<BigReal>& a);

// exp(a) for a series with zero constant term: n E_n = sum k a_k E_{n-k}.
template <typename T>
Series<T> exp_series(const Series<T>& a) {
  if (!ring::is_zero(a[0])) throw DomainError("exp_series needs a zero constant term");
  std::vector<T> e;
  e.reserve(a.size());
  e.push_back(ring::one_like(a[0]));
  for (long n = 1; n <= a.order(); ++n) {
    T acc = ring::zero_like(a[0]);
    for (long k = 1; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (ring::is_zero(a[uk])) continue;
      acc += ring::from_long(a[0], k) * (a[uk] * e[static_cast<std::size_t>(n - k)]);
    }
    e.push_back(ring::divide_exact(acc, ring::from_long(a[0], n)));
  }
  return Series<T>(std::move(e), 0);
}

// (x d/dx)^k: c_n x^{n+r} -> (n+r)^k c_n x^{n+r}, r the prefactor exponent.
template <typename T>
Series<T> theta_apply(const Series<T>& a, int k) {
  std::vector<T> c;
  c.reserve(a.size());
  for (int n = 0; n <= a.order(); ++n) {
    Rational w = Rational(n) + a.prefactor();
    Rational wk = 1;
    for (int i = 0; i < k; ++i) wk *= w;
    c.push_back(ring::scale(a[static_cast<std::size_t>(n)], wk));
  }
  return Series<T>(std::move(c), a.prefactor());
}

// (1 + x)^{-1} = sum (-x)^n.
Series<Rational> one_over_one_plus_x(int order);

inline constexpr int kMinimumOrderForL = 8;

// Applies L = (1/f)(theta^3 - 2f(theta^3 + theta)f + f^2 theta^3 f^2)(1/(1+f))
// right to left; every bare f is a multiplication operator. The result has
// order N-1 for an input of order N.
template <typename T>
Series<T> apply_L(const Series<T>& input) {
  if (input.order() < kMinimumOrderForL) {
    throw InsufficientOrderError("apply_L needs an expansion of order at least 8");
  }
  if (input.prefactor() != 0) throw DomainError("apply_L expects an ordinary power series in f");
  const Series<T> y = multiply_schoolbook(input, one_over_one_plus_x(input.order()));
  Series<T> bracket = theta_apply(y, 3);
  const Series<T> fy = y.shifted(1);
  bracket -= (theta_apply(fy, 3) + theta_apply(fy, 1)).shifted(1).scaled(2);
  bracket += theta_apply(y.shifted(2), 3).shifted(2);
  return bracket.truncated(input.order()).shifted(-1);
}

// Sum c_n x^n by Horner's rule (the prefactor is left to the caller).
template <typename T, typename X>
X evaluate(const Series<T>& s, const X& x) {
  X acc = x * 0L;
  for (int n = s.order(); n >= 0; --n) {
    acc = acc * x;
    acc = acc + X(s[static_cast<std::size_t>(n)], x.precision());
  }
  return acc;
}

}  // namespace magagm
