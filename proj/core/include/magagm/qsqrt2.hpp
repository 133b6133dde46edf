#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "magagm/precision.hpp"

namespace magagm {

// Exact element a + b*sqrt(2) of Q(sqrt 2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) { normalize(); }
  QSqrt2(const Rational& a) : a_(a), b_(0) { normalize(); }  // NOLINT: rationals embed implicitly
  QSqrt2(long a) : a_(a), b_(0) {}                           // NOLINT

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QSqrt2 conj() const { return {a_, -b_}; }
  // a^2 - 2 b^2.
  Rational norm() const;
  // Exact sign of a + b sqrt 2.
  int sign() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);
  QSqrt2 operator-() const { return {-a_, -b_}; }

  BigReal to_real(const PrecisionContext& ctx) const;
  std::string to_string() const;

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  void normalize();
  Rational a_;
  Rational b_;
};

QSqrt2 operator+(QSqrt2 x, const QSqrt2& y);
QSqrt2 operator-(QSqrt2 x, const QSqrt2& y);
QSqrt2 operator*(QSqrt2 x, const QSqrt2& y);
QSqrt2 operator/(QSqrt2 x, const QSqrt2& y);
QSqrt2 pow(const QSqrt2& x, long n);

// Square root inside Q(sqrt 2) with nonnegative real value, if one exists.
std::optional<QSqrt2> try_sqrt(const QSqrt2& x);

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

}  // namespace magagm
