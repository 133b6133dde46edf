#include "magagm/qsqrt2.hpp"

#include "magagm/errors.hpp"

namespace magagm {

void QSqrt2::normalize() {
  a_.canonicalize();
  b_.canonicalize();
}

Rational QSqrt2::norm() const {
  Rational n = a_ * a_ - 2 * b_ * b_;
  n.canonicalize();
  return n;
}

int QSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const int c = cmp(a_ * a_, 2 * b_ * b_);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  const Rational n = o.norm();
  if (n == 0) throw DomainError("division by zero in Q(sqrt 2)");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

BigReal QSqrt2::to_real(const PrecisionContext& ctx) const {
  return ctx.real(a_) + sqrt(ctx.real(2)) * b_;
}

std::string QSqrt2::to_string() const {
  if (b_ == 0) return a_.get_str();
  if (a_ == 0) return b_.get_str() + "*sqrt(2)";
  return a_.get_str() + (b_ < 0 ? " - " : " + ") + Rational(abs(b_)).get_str() + "*sqrt(2)";
}

QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }

QSqrt2 pow(const QSqrt2& x, long n) {
  if (n < 0) return QSqrt2(1L) / pow(x, -n);
  QSqrt2 result(1L);
  QSqrt2 base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

std::optional<QSqrt2> try_sqrt(const QSqrt2& x) {
  if (x.is_zero()) return QSqrt2(0L);
  if (x.sign() < 0) return std::nullopt;
  // (u + v sqrt 2)^2 = x  <=>  u^2 + 2v^2 = a, 2uv = b; u^2 = (a +- sqrt(norm))/2.
  const auto s = rational_sqrt(x.norm());
  if (!s) return std::nullopt;
  for (const Rational& u2 : {Rational((x.a() + *s) / 2), Rational((x.a() - *s) / 2)}) {
    const auto u = rational_sqrt(u2);
    if (!u) continue;
    QSqrt2 candidate;
    if (*u == 0) {
      const auto v = rational_sqrt(Rational(x.a() / 2));
      if (!v) continue;
      candidate = QSqrt2(Rational(0), *v);
    } else {
      candidate = QSqrt2(*u, Rational(x.b() / (2 * *u)));
    }
    if (candidate.sign() < 0) candidate = -candidate;
    if (candidate * candidate == x) return candidate;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.to_string(); }

}  // namespace magagm
