#include "magagm/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "magagm/errors.hpp"

namespace magagm {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

template <typename Op>
BigReal unary(const BigReal& x, Op op) {
  BigReal r(x.precision());
  op(r.get(), x.get(), kRound);
  return r;
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigReal::BigReal() { mpfr_init2(value_, MPFR_PREC_MIN); mpfr_set_zero(value_, 1); }

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

BigReal::BigReal(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, kRound);
}

BigReal::BigReal(const Integer& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

BigReal::BigReal(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigReal::BigReal(std::string_view decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, kRound) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + s);
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_precision(mpfr_prec_t bits) const {
  BigReal r(bits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

void BigReal::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, kRound);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

double BigReal::log10_abs() const {
  if (is_zero()) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, value_, kRound);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::string BigReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string BigReal::to_fixed(int decimals) const {
  long e = 0;
  double m = mpfr_get_d_2exp(&e, value_, kRound);
  (void)m;
  std::size_t size = static_cast<std::size_t>(decimals) + static_cast<std::size_t>(std::abs(e)) / 3 + 64;
  std::vector<char> buf(size);
  std::string fmt = "%." + std::to_string(decimals) + "Rf";
  int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Rational BigReal::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite value has no rational form");
  Integer mantissa;
  mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational r(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

Integer BigReal::round_to_integer() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDNA);
  return z;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), kRound);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), kRound);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), kRound);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), kRound);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_add_si(r.get(), a.get(), b, kRound);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_sub_si(r.get(), a.get(), b, kRound);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), kRound);
  return r;
}

BigReal operator+(long a, const BigReal& b) { return b + a; }

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, kRound);
  return r;
}

BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_div_si(r.get(), a.get(), b, kRound);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), kRound);
  return r;
}

BigReal operator*(const BigReal& a, const Rational& b) {
  BigReal r(a.precision());
  mpfr_mul_q(r.get(), a.get(), b.get_mpq_t(), kRound);
  return r;
}

BigReal operator*(const Rational& a, const BigReal& b) { return b * a; }

BigReal operator+(const BigReal& a, const Rational& b) {
  BigReal r(a.precision());
  mpfr_add_q(r.get(), a.get(), b.get_mpq_t(), kRound);
  return r;
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  return unary(x, mpfr_sqrt);
}
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  return unary(x, mpfr_log);
}
BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  return unary(x, mpfr_log10);
}
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal asinh(const BigReal& x) { return unary(x, mpfr_asinh); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRound);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRound);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRound);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRound);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal pow10(long e, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), kRound);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), kRound);
  return r;
}

BigReal const_pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), kRound);
  return r;
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal re = re_ * rhs.re_ - im_ * rhs.im_;
  BigReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  BigReal d = rhs.norm();
  BigReal re = (re_ * rhs.re_ + im_ * rhs.im_) / d;
  BigReal im = (im_ * rhs.re_ - re_ * rhs.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() != '-') im = "+" + im;
  return re_.to_string(digits) + " " + im + "i";
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex r = a;
  return r *= b;
}
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
BigComplex operator*(const BigReal& a, BigComplex b) { return b *= a; }
BigComplex operator*(BigComplex a, long b) { return a *= b; }
BigComplex operator/(BigComplex a, long b) { return a /= b; }
BigComplex operator+(BigComplex a, const BigReal& b) {
  a.re() += b;
  return a;
}

BigReal abs(const BigComplex& z) {
  BigReal r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), kRound);
  return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re());
  BigReal s(z.precision()), c(z.precision());
  BigReal im = z.im().with_precision(z.precision());
  mpfr_sin_cos(s.get(), c.get(), im.get(), kRound);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) {
    BigComplex one(BigReal(1L, z.precision()), BigReal(z.precision()));
    return one / pow(z, -n);
  }
  BigComplex result(BigReal(1L, z.precision()), BigReal(z.precision()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  BigReal r = abs(z);
  BigReal re = sqrt((r + z.re()) / 2L);
  BigReal im = sqrt((r - z.re()) / 2L);
  if (z.im().sign() < 0) im = -im;
  return {re, im};
}

// ---------------------------------------------------------------------------
// PrecisionContext

struct PrecisionContext::Constants {
  BigReal pi;
  BigReal exp_minus_pi;
};

PrecisionContext::PrecisionContext(int digits, int guard)
    : digits_(digits), guard_(guard), bits_(bits_for_digits(digits + guard)) {
  if (digits < 10) throw DomainError("precision must be at least 10 digits");
  if (guard < 0) throw DomainError("guard digits must be non-negative");
  BigReal pi = const_pi(bits_);
  BigReal emp = exp(-pi);
  constants_ = std::make_shared<const Constants>(Constants{std::move(pi), std::move(emp)});
}

const BigReal& PrecisionContext::pi() const { return constants_->pi; }
const BigReal& PrecisionContext::exp_minus_pi() const { return constants_->exp_minus_pi; }

BigReal PrecisionContext::tolerance() const { return pow10(-digits_, bits_); }
BigReal PrecisionContext::epsilon() const { return pow10(-(digits_ + guard_), bits_); }

}  // namespace magagm
