#include "magagm/modular.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "magagm/rational.hpp"

namespace magagm {

namespace {

// prod_{k>=1} (1 - q^{level k}) through order n_max.
Series<Integer> eta_product(int level, int n_max) {
  std::vector<Integer> c(static_cast<std::size_t>(n_max) + 1, Integer(0));
  c[0] = 1;
  for (int step = level; step <= n_max; step += level) {
    for (int n = n_max; n >= step; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - step)];
  }
  return Series<Integer>(std::move(c));
}

Series<Integer> integer_one(int n_max) { return Series<Integer>::one(n_max); }

}  // namespace

Rational EtaQuotient::prefactor() const {
  Rational p = 0;
  for (const auto& [level, exponent] : factors) p += ratio(level * exponent, 24);
  p.canonicalize();
  return p;
}

Series<Integer> EtaQuotient::qexp(int n_max) const {
  Series<Integer> result = integer_one(n_max);
  for (const auto& [level, exponent] : factors) result = result * power(eta_product(level, n_max), exponent);
  return result.with_prefactor(prefactor());
}

BigComplex EtaQuotient::eval(const BigComplex& tau, const PrecisionContext& ctx) const {
  BigComplex result(ctx.real(1), ctx.real(0));
  for (const auto& [level, exponent] : factors) {
    const BigComplex e = eta_eval(level, tau, ctx);
    result = exponent >= 0 ? result * pow(e, exponent) : result / pow(e, -exponent);
  }
  return result;
}

Series<Integer> eta_qexp(int level, int n_max) {
  if (level < 1) throw DomainError("eta level must be positive");
  return eta_product(level, n_max).with_prefactor(ratio(level, 24));
}

Series<Integer> f_squared_qexp(int n_max) {
  if (n_max < 1) throw InsufficientOrderError("f_squared_qexp needs order at least 1");
  const Series<Integer> p1 = eta_product(1, n_max);
  const Series<Integer> p2 = eta_product(2, n_max);
  const Series<Integer> p4 = eta_product(4, n_max);
  const Series<Integer> inv_p2_cubed = power(p2, -3);
  // 16 q (p1 p4^2 / p2^3)^8: the prefactor is 8 (1 + 8 - 6)/24 = 1.
  const Series<Integer> first = power(p1 * p4 * p4 * inv_p2_cubed, 8).shifted(1).truncated(n_max).scaled(16);
  // 1 - (p1^2 p4 / p2^3)^8 with prefactor 8 (2 + 4 - 6)/24 = 0.
  const Series<Integer> second = integer_one(n_max) - power(p1 * p1 * p4 * inv_p2_cubed, 8);
  if (!(first == second)) throw ConsistencyError("the two eta-quotient expressions for f^2 disagree");
  return first;
}

Series<Integer> psi_qexp(int n_max) {
  if (n_max < 1) throw InsufficientOrderError("psi_qexp needs order at least 1");
  const Series<Integer> quotient = eta_product(2, n_max) * reciprocal(eta_product(1, n_max));
  return power(quotient, 24).shifted(1).truncated(n_max).scaled(64);
}

BigComplex eta_eval(int level, const BigComplex& tau, const PrecisionContext& ctx) {
  if (tau.im().sign() <= 0) throw DomainError("eta needs Im tau > 0");
  const BigReal two_pi_level = ctx.pi() * (2L * level);
  const BigComplex t = ctx.complex(tau.re(), tau.im());
  // x = exp(2 pi i level tau)
  const BigComplex x = exp(BigComplex(-two_pi_level * t.im(), two_pi_level * t.re()));
  const BigComplex x3 = x * x * x;
  BigComplex sum(ctx.real(1), ctx.real(0));
  BigComplex p_minus = x;      // x^{k(3k-1)/2}
  BigComplex p_plus = x * x;   // x^{k(3k+1)/2}
  BigComplex step = x3 * x;    // x^{3k+1}
  const BigReal eps = ctx.epsilon();
  for (long k = 1;; ++k) {
    const BigComplex pair = p_minus + p_plus;
    if (k % 2 == 0) {
      sum += pair;
    } else {
      sum -= pair;
    }
    if (abs(p_minus) < eps * abs(sum)) break;
    p_minus *= step;
    p_plus *= step * x;
    step *= x3;
  }
  // q^{level/24} = exp(2 pi i level tau / 24)
  const BigComplex prefactor = exp(BigComplex(-two_pi_level * t.im() / 24L, two_pi_level * t.re() / 24L));
  return prefactor * sum;
}

BigComplex psi_eval(const BigComplex& tau, const PrecisionContext& ctx) {
  const BigComplex ratio = eta_eval(2, tau, ctx) / eta_eval(1, tau, ctx);
  return pow(ratio, 24) * 64L;
}

Rational j_invariant(const Rational& psi) {
  if (psi == 0) throw PoleError("j-invariant has a pole at psi = 0");
  const Rational s = 1 + 4 * psi;
  Rational j = 64 * s * s * s / psi;
  j.canonicalize();
  return j;
}

QSqrt2 j_invariant(const QSqrt2& psi) {
  if (psi.is_zero()) throw PoleError("j-invariant has a pole at psi = 0");
  const QSqrt2 s = QSqrt2(1L) + QSqrt2(4L) * psi;
  return QSqrt2(64L) * s * s * s / psi;
}

BigReal j_invariant(const BigReal& psi) {
  if (psi.is_zero()) throw PoleError("j-invariant has a pole at psi = 0");
  const BigReal s = 1L + psi * 4L;
  return s * s * s * 64L / psi;
}

BigComplex j_invariant(const BigComplex& psi) {
  if (psi.is_zero()) throw PoleError("j-invariant has a pole at psi = 0");
  const BigComplex s = psi * 4L + BigReal(1L, psi.precision());
  return s * s * s * 64L / psi;
}

FourierTable phi_qexp(int n_max) {
  if (n_max < 1) throw InsufficientOrderError("phi_qexp needs order at least 1");
  const Series<Integer> p1 = eta_product(1, n_max);
  const Series<Integer> p2 = eta_product(2, n_max);
  const Series<Integer> p = power(p1 * p2, 4);
  // 1 + psi = 1 + 64 q (p2/p1)^24, an integer series with constant term 1.
  const Series<Integer> u = power(p2 * reciprocal(p1), 24);
  const Series<Integer> one_plus_psi = integer_one(n_max) + u.shifted(1).truncated(n_max).scaled(64);
  // (psi - 1)/(psi + 1) = 1 - 2/(1 + psi)
  const Series<Integer> r = integer_one(n_max) - reciprocal(one_plus_psi).scaled(2);
  const Series<Integer> pr = p * r;
  FourierTable table;
  table.truncation = n_max;
  table.A.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    // phi = q^{1/2} p r / 2 = -sum (n + 1/2) A(n) q^{n+1/2}, so A(n) = -(p r)_n / (2n+1).
    const Integer& c = pr[static_cast<std::size_t>(n)];
    const Integer divisor = 2 * n + 1;
    Integer quotient;
    if (mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()) == 0) table.violations.push_back(n);
    mpz_tdiv_q(quotient.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    table.A.push_back(-quotient);
  }
  return table;
}

std::string fourier_table_csv(const FourierTable& table) {
  std::ostringstream out;
  out << "n,A\n";
  for (std::size_t n = 0; n < table.A.size(); ++n) out << n << ',' << table.A[n].get_str() << '\n';
  return out.str();
}

std::string fourier_table_checksum(const FourierTable& table) { return fnv1a_hex(fourier_table_csv(table)); }

std::string fourier_table_json(const FourierTable& table) {
  nlohmann::json j;
  j["truncation"] = table.truncation;
  j["checksum"] = fourier_table_checksum(table);
  j["integral"] = table.integral();
  j["violations"] = table.violations;
  nlohmann::json values = nlohmann::json::array();
  for (const auto& a : table.A) values.push_back(a.get_str());
  j["A"] = std::move(values);
  return j.dump(2);
}

BigComplex phi_eval(const BigComplex& tau, const PrecisionContext& ctx) {
  const BigComplex e1 = eta_eval(1, tau, ctx);
  const BigComplex e2 = eta_eval(2, tau, ctx);
  const BigComplex a = pow(e2, 24) * 64L;
  const BigComplex b = pow(e1, 24);
  const BigComplex den = a + b;
  const BigReal threshold = pow10(-ctx.digits() / 2, ctx.bits()) * (abs(a) + abs(b));
  if (abs(den) < threshold) throw PoleError("phi evaluated next to a pole");
  return pow(e1 * e2, 4) * (a - b) / den / 2L;
}

Lemma2Report verify_lemma2(const BigComplex& tau, const PrecisionContext& ctx) {
  const BigComplex t = ctx.complex(tau.re(), tau.im());
  const BigComplex p = phi_eval(t, ctx);
  const BigComplex shifted = phi_eval(t + ctx.real(1), ctx);
  const BigComplex one(ctx.real(1), ctx.real(0));
  const BigComplex image = (one * -1L) / (t * 2L);
  const BigComplex inverted = phi_eval(image, ctx);
  const BigReal scale = abs(p);
  Lemma2Report report{t, abs(shifted + p) / scale, abs(inverted / (pow(t, 4) * 4L) + p) / scale, false};
  report.passed = report.shift_residual < ctx.tolerance() && report.inversion_residual < ctx.tolerance();
  return report;
}

QSqrt2 r_of_f(const QSqrt2& f) {
  const QSqrt2 x = QSqrt2(2L) * f / (QSqrt2(1L) + f * f);
  return QSqrt2(2L) * x * x - QSqrt2(1L);
}

BigComplex CMRecord::tau(const PrecisionContext& ctx) const {
  const BigReal im = pow(ctx.real(2), BigReal(ratio(k - 1, 2), ctx.bits()));
  return {ctx.real(0), im};
}

BigReal CMRecord::f_value(const PrecisionContext& ctx) const {
  if (f) return f->to_real(ctx);
  const BigReal p = psi.to_real(ctx);
  return (sqrt(1L + p) - 1L) / sqrt(p);
}

std::vector<CMRecord> cm_table() {
  const QSqrt2 f0 = QSqrt2::sqrt2() - QSqrt2(1L);
  const QSqrt2 psi1(ratio(1, 8));
  const QSqrt2 psi2 = pow(f0, 3) / QSqrt2(8L);
  const QSqrt2 psi3 = QSqrt2(Rational(0), Rational(2)) * psi2 * psi2;
  const QSqrt2 positive[4] = {QSqrt2(1L), psi1, psi2, psi3};
  std::vector<CMRecord> table;
  for (int k = -3; k <= 3; ++k) {
    CMRecord rec;
    rec.k = k;
    rec.psi = k >= 0 ? positive[k] : QSqrt2(1L) / positive[-k];
    const auto root_1p = try_sqrt(QSqrt2(1L) + rec.psi);
    const auto root_p = try_sqrt(rec.psi);
    if (root_1p && root_p) rec.f = (*root_1p - QSqrt2(1L)) / *root_p;
    rec.R = (rec.psi - QSqrt2(1L)) / (rec.psi + QSqrt2(1L));
    table.push_back(std::move(rec));
  }
  return table;
}

TripleSum triple_sum_eval(const BigReal& q, const FourierTable& table, const PrecisionContext& ctx) {
  const BigReal x = q.with_precision(ctx.bits());
  if (x.sign() <= 0 || !(x < 1L)) throw DomainError("triple_sum_eval needs 0 < q < 1");
  const BigReal growth = exp(ctx.pi()) * x;
  if (!(growth < 1L)) throw DomainError("the A(n) series diverges for q >= exp(-pi)");
  BigReal sum = ctx.real(0);
  BigReal qpow = sqrt(x);  // q^{n+1/2}
  for (std::size_t n = 0; n < table.A.size(); ++n) {
    const BigReal nh = ctx.real(ratio(2 * static_cast<long>(n) + 1, 2));
    sum += BigReal(table.A[n], ctx.bits()) * qpow / (nh * nh);
    qpow *= x;
  }
  const BigReal pi = ctx.pi();
  TripleSum out;
  out.value = pi * pi / 8L - sum;
  const BigReal next = ctx.real(ratio(2 * static_cast<long>(table.A.size()) + 1, 2));
  // Terms beyond the table: (e^{pi} q)^{n+1/2} / (2 (n+1/2)^2), a geometric envelope.
  out.tail_bound = pow(growth, next) / (next * next * 2L) / (1L - growth);
  out.sufficient = out.tail_bound < ctx.tolerance();
  return out;
}

}  // namespace magagm
