#include "magagm/pi_quadratic.hpp"

#include "magagm/errors.hpp"

namespace magagm {

PiQuadratic& PiQuadratic::operator+=(const PiQuadratic& o) {
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

PiQuadratic& PiQuadratic::operator-=(const PiQuadratic& o) {
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

PiQuadratic& PiQuadratic::operator*=(const Rational& c) {
  r_ *= c;
  s_ *= c;
  return *this;
}

PiQuadratic& PiQuadratic::operator/=(const Rational& c) {
  r_ /= c;
  s_ /= c;
  return *this;
}

BigReal PiQuadratic::to_real(const PrecisionContext& ctx) const {
  const BigReal& pi = ctx.pi();
  return ctx.real(r_) + ctx.real(s_) * pi * pi;
}

std::string PiQuadratic::to_string() const {
  if (s_ == 0) return r_.get_str();
  std::string out = r_ == 0 ? "" : r_.get_str() + (s_ > 0 ? " + " : " - ");
  Rational s = (r_ != 0 && s_ < 0) ? Rational(-s_) : s_;
  return out + s.get_str() + "*pi^2";
}

PiQuadratic operator+(PiQuadratic a, const PiQuadratic& b) { return a += b; }
PiQuadratic operator-(PiQuadratic a, const PiQuadratic& b) { return a -= b; }
PiQuadratic operator*(PiQuadratic a, const Rational& c) { return a *= c; }
PiQuadratic operator*(const Rational& c, PiQuadratic a) { return a *= c; }
PiQuadratic operator/(PiQuadratic a, const Rational& c) { return a /= c; }

PiQuadratic operator*(const PiQuadratic& a, const PiQuadratic& b) {
  if (a.is_rational()) return b * a.rational_part();
  if (b.is_rational()) return a * b.rational_part();
  throw DomainError("product of two pi^2-carrying values leaves the r + s*pi^2 form");
}

std::ostream& operator<<(std::ostream& os, const PiQuadratic& x) { return os << x.to_string(); }

}  // namespace magagm
