#pragma once

#include <ostream>
#include <string>

#include "magagm/precision.hpp"

namespace magagm {

// Exact value r + s*pi^2 with rational r and s.
//
// Closed under addition and rational scaling. Products are only defined
// when at least one factor is purely rational.
class PiQuadratic {
 public:
  PiQuadratic() = default;
  PiQuadratic(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}
  // Purely rational value.
  PiQuadratic(const Rational& r) : r_(r), s_(0) {}  // NOLINT: implicit by design of the coefficient ring
  PiQuadratic(long r) : r_(r), s_(0) {}             // NOLINT

  static PiQuadratic pi_squared(const Rational& s) { return {Rational(0), s}; }

  const Rational& rational_part() const { return r_; }
  const Rational& pi2_part() const { return s_; }
  bool is_zero() const { return r_ == 0 && s_ == 0; }
  bool is_rational() const { return s_ == 0; }

  PiQuadratic& operator+=(const PiQuadratic& o);
  PiQuadratic& operator-=(const PiQuadratic& o);
  PiQuadratic& operator*=(const Rational& c);
  PiQuadratic& operator/=(const Rational& c);
  PiQuadratic operator-() const { return {-r_, -s_}; }

  BigReal to_real(const PrecisionContext& ctx) const;
  std::string to_string() const;

  friend bool operator==(const PiQuadratic& a, const PiQuadratic& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

 private:
  Rational r_;
  Rational s_;
};

PiQuadratic operator+(PiQuadratic a, const PiQuadratic& b);
PiQuadratic operator-(PiQuadratic a, const PiQuadratic& b);
PiQuadratic operator*(PiQuadratic a, const Rational& c);
PiQuadratic operator*(const Rational& c, PiQuadratic a);
PiQuadratic operator/(PiQuadratic a, const Rational& c);
// Throws DomainError unless one operand is purely rational.
PiQuadratic operator*(const PiQuadratic& a, const PiQuadratic& b);

std::ostream& operator<<(std::ostream& os, const PiQuadratic& x);

}  // namespace magagm
