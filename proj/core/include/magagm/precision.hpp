#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <memory>
#include <string>
#include <string_view>

namespace magagm {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form (GMP's rational arithmetic requires it).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Multiple-precision binary floating point value. Each value owns its
// precision; binary operations produce a result at the larger of the two
// operand precisions, so exact small constants mix freely with working
// values. A default-constructed BigReal is an exact zero.
class BigReal {
 public:
  BigReal();
  explicit BigReal(mpfr_prec_t bits);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(double value, mpfr_prec_t bits);
  BigReal(const Integer& value, mpfr_prec_t bits);
  BigReal(const Rational& value, mpfr_prec_t bits);
  BigReal(std::string_view decimal, mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  // Copy rounded (or widened) to `bits`.
  BigReal with_precision(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal operator-() const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Base-10 exponent e with 10^(e-1) <= |x| < 10^e (approximately); used for
  // digit bookkeeping only.
  double log10_abs() const;
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  // Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  // Exact binary value as a rational.
  Rational to_rational() const;
  // Nearest integer (ties away from zero).
  Integer round_to_integer() const;

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_nan_p(a.value_) || mpfr_nan_p(b.value_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b) {
    int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  void widen_to(mpfr_prec_t bits);
  mpfr_t value_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator-(long a, const BigReal& b);
BigReal operator+(long a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);
BigReal operator*(const BigReal& a, const Rational& b);
BigReal operator*(const Rational& a, const BigReal& b);
BigReal operator+(const BigReal& a, const Rational& b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal asinh(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
// Exponentiation of 10 with the given precision.
BigReal pow10(long e, mpfr_prec_t bits);
BigReal const_pi(mpfr_prec_t bits);

class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_() {}

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  BigReal& re() { return re_; }
  BigReal& im() { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator*=(long rhs);
  BigComplex& operator/=(long rhs);
  BigComplex operator-() const { return {-re_, -im_}; }

  BigComplex conj() const { return {re_, -im_}; }
  BigReal norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string(int digits) const;

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigReal& b);
BigComplex operator*(const BigReal& a, BigComplex b);
BigComplex operator*(BigComplex a, long b);
BigComplex operator/(BigComplex a, long b);
BigComplex operator+(BigComplex a, const BigReal& b);

BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex sqrt(const BigComplex& z);

// Working precision for a requested number of decimal digits.
//
// Results are reported to `digits`; everything is computed with `guard`
// extra digits. Constants are computed once per context at construction;
// the context is immutable afterwards and safe to share between threads.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits, int guard = 20);

  int digits() const { return digits_; }
  int guard() const { return guard_; }
  int working_digits() const { return digits_ + guard_; }
  mpfr_prec_t bits() const { return bits_; }

  const BigReal& pi() const;
  const BigReal& exp_minus_pi() const;

  // 10^-digits, the reporting tolerance.
  BigReal tolerance() const;
  // 10^-(digits + guard), the working epsilon.
  BigReal epsilon() const;

  BigReal real(long value) const { return BigReal(value, bits_); }
  BigReal real(const Rational& value) const { return BigReal(value, bits_); }
  BigReal parse(std::string_view decimal) const { return BigReal(decimal, bits_); }
  BigComplex complex(const BigReal& re, const BigReal& im) const {
    return {re.with_precision(bits_), im.with_precision(bits_)};
  }

  // Same reported digits, doubled guard: the re-run used to detect
  // cancellation in multi-stage pipelines.
  PrecisionContext with_doubled_guard() const { return PrecisionContext(digits_, 2 * guard_); }
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }

 private:
  struct Constants;
  int digits_;
  int guard_;
  mpfr_prec_t bits_;
  std::shared_ptr<const Constants> constants_;
};

// Bits needed to carry `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace magagm
