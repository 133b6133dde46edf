#include "magagm/series.hpp"

namespace magagm {

namespace ring {

Integer scale(const Integer& x, const Rational& c) {
  Rational r = Rational(x) * c;
  r.canonicalize();
  if (r.get_den() != 1) throw DomainError("scaling leaves the integers; use a rational series");
  return r.get_num();
}

Integer divide_exact(const Integer& x, const Integer& n) {
  if (n == 0) throw SingularSeriesError("division by zero");
  if (mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw DomainError("quotient leaves the integers; use a rational series");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return q;
}

}  // namespace ring

Rational add_prefactors(const Rational& a, const Rational& b) {
  Rational r = a + b;
  r.canonicalize();
  return r;
}

namespace {

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace

Series<Rational> sqrt(const Series<Rational>& a) {
  if (a[0] == 0) throw SingularSeriesError("square root of a series with zero constant term");
  Integer num_root, den_root;
  if (!is_square(a[0].get_num(), num_root) || !is_square(a[0].get_den(), den_root)) {
    throw SingularSeriesError("constant term is not the square of a rational");
  }
  return sqrt_with_root(a, Rational(num_root, den_root));
}

Series<BigReal> sqrt(const Series<BigReal>& a) {
  if (a[0].sign() <= 0) throw SingularSeriesError("square root needs a positive constant term");
  return sqrt_with_root(a, magagm::sqrt(a[0]));
}

Series<Rational> one_over_one_plus_x(int order) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c.emplace_back(n % 2 == 0 ? 1 : -1);
  return Series<Rational>(std::move(c));
}

}  // namespace magagm
