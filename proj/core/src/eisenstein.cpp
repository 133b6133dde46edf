#include "magagm/eisenstein.hpp"

#include <sstream>

#include "magagm/errors.hpp"
#include "magagm/special.hpp"

namespace magagm {

namespace {

struct EisensteinShape {
  int power;     // k in sigma_k
  long factor;   // 1 + factor * sum sigma_k(n) q^n
};

EisensteinShape shape(Eisenstein which) {
  switch (which) {
    case Eisenstein::L: return {1, -24};
    case Eisenstein::M: return {3, 240};
    case Eisenstein::N: return {5, -504};
  }
  throw DomainError("unknown Eisenstein series");
}

}  // namespace

EisensteinPoly EisensteinPoly::constant(const Rational& c) {
  EisensteinPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

EisensteinPoly EisensteinPoly::L() {
  EisensteinPoly p;
  p.add_term({1, 0, 0}, 1);
  return p;
}

EisensteinPoly EisensteinPoly::M() {
  EisensteinPoly p;
  p.add_term({0, 1, 0}, 1);
  return p;
}

EisensteinPoly EisensteinPoly::N() {
  EisensteinPoly p;
  p.add_term({0, 0, 1}, 1);
  return p;
}

void EisensteinPoly::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::set<int> EisensteinPoly::weights() const {
  std::set<int> w;
  for (const auto& [mono, c] : terms_) w.insert(2 * mono[0] + 4 * mono[1] + 6 * mono[2]);
  return w;
}

EisensteinPoly& EisensteinPoly::operator+=(const EisensteinPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

EisensteinPoly& EisensteinPoly::operator-=(const EisensteinPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

EisensteinPoly& EisensteinPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

EisensteinPoly operator*(const EisensteinPoly& a, const EisensteinPoly& b) {
  EisensteinPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return out;
}

std::string EisensteinPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"L", "M", "N"};
  for (const auto& [mono, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    bool bare = mono[0] == 0 && mono[1] == 0 && mono[2] == 0;
    if (mag != 1 || bare) os << mag.get_str();
    for (int i = 0; i < 3; ++i) {
      if (mono[i] == 0) continue;
      os << names[i];
      if (mono[i] > 1) os << "^" << mono[i];
    }
  }
  return os.str();
}

EisensteinPoly ramanujan_derive(const EisensteinPoly& p) {
  const EisensteinPoly l = EisensteinPoly::L(), m = EisensteinPoly::M(), n = EisensteinPoly::N();
  const EisensteinPoly dl = (l * l - m) * ratio(1, 12);
  const EisensteinPoly dm = (l * m - n) * ratio(1, 3);
  const EisensteinPoly dn = (l * n - m * m) * ratio(1, 2);
  EisensteinPoly out;
  for (const auto& [mono, c] : p.terms()) {
    const EisensteinPoly* d[3] = {&dl, &dm, &dn};
    for (int v = 0; v < 3; ++v) {
      if (mono[v] == 0) continue;
      EisensteinPoly::Monomial rest = mono;
      rest[v] -= 1;
      EisensteinPoly base = EisensteinPoly::constant(c * mono[v]);
      EisensteinPoly power = EisensteinPoly::constant(1);
      for (int i = 0; i < rest[0]; ++i) power = power * l;
      for (int i = 0; i < rest[1]; ++i) power = power * m;
      for (int i = 0; i < rest[2]; ++i) power = power * n;
      out += base * power * *d[v];
    }
  }
  return out;
}

Series<Integer> eisenstein_qexp(Eisenstein which, int n_max) {
  if (n_max < 0) throw DomainError("eisenstein_qexp: negative order");
  const auto [k, factor] = shape(which);
  std::vector<Integer> sigma(n_max + 1, 0);
  for (long d = 1; d <= n_max; ++d) {
    Integer dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    for (long multiple = d; multiple <= n_max; multiple += d) sigma[multiple] += dk;
  }
  std::vector<Integer> c(n_max + 1);
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n) c[n] = factor * sigma[n];
  return Series<Integer>(std::move(c));
}

Series<Rational> evaluate_qexp(const EisensteinPoly& p, int n_max) {
  const auto l = convert<Rational>(eisenstein_qexp(Eisenstein::L, n_max));
  const auto m = convert<Rational>(eisenstein_qexp(Eisenstein::M, n_max));
  const auto n = convert<Rational>(eisenstein_qexp(Eisenstein::N, n_max));
  const auto one = Series<Rational>::one(n_max, Rational(0));
  Series<Rational> acc = Series<Rational>::zero(n_max, Rational(0));
  for (const auto& [mono, c] : p.terms()) {
    Series<Rational> term = one;
    for (int i = 0; i < mono[0]; ++i) term = term * l;
    for (int i = 0; i < mono[1]; ++i) term = term * m;
    for (int i = 0; i < mono[2]; ++i) term = term * n;
    acc += term.scaled(c);
  }
  return acc;
}

BigReal eisenstein_sum(Eisenstein which, const BigReal& q, const PrecisionContext& ctx) {
  if (!(abs(q) < 1)) throw DomainError("eisenstein_sum: |q| must be below 1");
  const auto [k, factor] = shape(which);
  const BigReal eps = ctx.epsilon();
  const BigReal aq = abs(q);
  BigReal sum = ctx.real(0);
  BigReal qn = ctx.real(1);
  for (long n = 1;; ++n) {
    qn *= q;
    BigReal nk = ctx.real(1);
    for (int i = 0; i < k; ++i) nk *= n;
    BigReal term = nk * qn / (1L - qn);
    sum += term;
    // Remaining terms are dominated by a geometric tail with ratio |q| (1+1/n)^k.
    BigReal bound = abs(term) * 2L / (1L - aq);
    if (n > 2 * k && bound < eps) break;
  }
  return 1L + sum * factor;
}

EisensteinAtQ0 eisenstein_at_q0(const PrecisionContext& ctx) {
  const BigReal& pi = ctx.pi();
  BigReal g = gamma_quarter(ctx);
  BigReal g8 = pow(g, 8);
  BigReal m1 = -(3L * g8) / (16L * pow(pi, 6));

  EisensteinAtQ0 out;
  out.level1 = {6L / pi, m1, ctx.real(0)};
  out.level2 = {3L / pi, -m1 / 4L, ctx.real(0)};

  BigReal q0 = -ctx.exp_minus_pi();
  BigReal q0sq = q0 * q0;
  out.level1_sum = {eisenstein_sum(Eisenstein::L, q0, ctx), eisenstein_sum(Eisenstein::M, q0, ctx),
                    eisenstein_sum(Eisenstein::N, q0, ctx)};
  out.level2_sum = {eisenstein_sum(Eisenstein::L, q0sq, ctx), eisenstein_sum(Eisenstein::M, q0sq, ctx),
                    eisenstein_sum(Eisenstein::N, q0sq, ctx)};
  BigReal worst = ctx.real(0);
  auto track = [&](const BigReal& a, const BigReal& b) { worst = max(worst, abs(a - b)); };
  track(out.level1.L, out.level1_sum.L);
  track(out.level1.M, out.level1_sum.M);
  track(out.level1.N, out.level1_sum.N);
  track(out.level2.L, out.level2_sum.L);
  track(out.level2.M, out.level2_sum.M);
  track(out.level2.N, out.level2_sum.N);
  out.max_discrepancy = worst;
  return out;
}

}  // namespace magagm
