#include "magagm/asymptotics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "magagm/rational.hpp"

namespace magagm {

BigReal e_function(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("E(x) needs x > 0");
  return (x - 1L) / x * exp(x);
}

bool in_s(long m) {
  if (m < 1) return false;
  for (const auto& [p, e] : factor_small(m)) {
    if (p % 4 != 1) return false;
  }
  return true;
}

std::vector<long> s_sequence(long limit) {
  std::vector<long> out;
  for (long m = 1; m <= limit; ++m) {
    if (in_s(m)) out.push_back(m);
  }
  return out;
}

std::vector<SquareDecomposition> coprime_square_decompositions(long m) {
  if (m <= 1 || !in_s(m)) throw DomainError("m must be a member of the sequence greater than 1");
  std::vector<SquareDecomposition> out;
  for (long gamma = 1; gamma * gamma < m; gamma += 2) {
    const long rest = m - gamma * gamma;
    const long delta = std::lround(std::sqrt(static_cast<double>(rest)));
    if (delta > 0 && delta * delta == rest && std::gcd(gamma, delta) == 1) out.push_back({gamma, delta});
  }
  return out;
}

namespace {

// x^{-1} mod n in [0, n), or -1 when gcd(x, n) != 1.
long inverse_mod(long x, long n) {
  long r0 = n, r1 = ((x % n) + n) % n;
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) return -1;
  return ((s0 % n) + n) % n;
}

struct PrimePowers {
  std::vector<long> q;
};

PrimePowers prime_powers(long m) {
  PrimePowers out;
  for (const auto& [p, e] : factor_small(m)) {
    long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    out.q.push_back(q);
  }
  return out;
}

long cosine_key(long k, long m) {
  const long r = ((k % m) + m) % m;
  return std::min(r, m - r);
}

// Keys of sum_{eps, eps_1 = +1} cos(x pi r sum_k eps_k (m/q_k) / m).
std::vector<long> product_keys(long r, long m, const std::vector<long>& q) {
  std::vector<long> keys;
  const std::size_t omega = q.size();
  const std::size_t combos = std::size_t{1} << (omega - 1);
  for (std::size_t mask = 0; mask < combos; ++mask) {
    long k = (m / q[0]) % m;
    for (std::size_t i = 1; i < omega; ++i) {
      const long term = (m / q[i]) % m;
      k += ((mask >> (i - 1)) & 1) ? -term : term;
    }
    keys.push_back(cosine_key(((k % m) * (r % m)) % m, m));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<long> sum_keys(const std::vector<long>& r_j, long m) {
  std::vector<long> keys;
  for (long r : r_j) keys.push_back(cosine_key(r, m));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::optional<SingularityDatum> locate_singularity(long gamma, long delta) {
  if (gamma <= 0 || gamma % 2 == 0) throw DomainError("gamma must be odd and positive");
  SingularityDatum s;
  s.gamma = gamma;
  s.delta = delta;
  s.m = gamma * gamma + delta * delta;
  s.c = 2 * gamma;
  s.d = delta - gamma;
  s.a = inverse_mod(s.d, s.c);
  if (s.a < 0) throw DomainError("gcd(c, d) != 1: no modular inverse");
  if (s.a % 2 == 0) s.a += s.c;  // unreachable for odd d, kept for the odd-a contract
  s.b = (s.a * s.d - 1) / s.c;
  s.w = (s.a + s.b) * (s.c + s.d) + s.b * s.d;
  if (s.w <= 0 || s.w >= s.m || s.w % 2 == 0) return std::nullopt;
  s.r = (s.m - s.w) / 2;
  return s;
}

bool maps_to_base_pole(const SingularityDatum& s) {
  if (s.a * s.d - s.b * s.c != 1 || s.c % 2 != 0) return false;
  const Rational x = ratio(s.w, 2 * s.m);
  const Rational y = ratio(1, 2 * s.m);
  // (d tau - b) / (-c tau + a) with tau = x + iy.
  const Rational nr = s.d * x - s.b, ni = s.d * y;
  const Rational dr = -s.c * x + s.a, di = -s.c * y;
  const Rational den = dr * dr + di * di;
  Rational re = (nr * dr + ni * di) / den;
  Rational im = (ni * dr - nr * di) / den;
  re.canonicalize();
  im.canonicalize();
  return re == ratio(1, 2) && im == ratio(1, 2);
}

SingularitySet singularities(long m) {
  SingularitySet set;
  set.m = m;
  for (const auto& dec : coprime_square_decompositions(m)) {
    int accepted = 0;
    for (long sign : {1L, -1L}) {
      if (auto s = locate_singularity(dec.gamma, sign * dec.delta)) {
        set.data.push_back(*s);
        ++accepted;
      }
    }
    if (accepted != 1) set.violations.push_back(dec);
  }
  return set;
}

ROfM r_of_m(long m) {
  ROfM out;
  out.m = m;
  out.set = singularities(m);
  for (const auto& s : out.set.data) out.r_j.push_back(s.r);
  const PrimePowers pp = prime_powers(m);
  if (pp.q.size() == 1) {
    if (out.set.data.size() == 1) {
      out.r = out.set.data[0].r;
      out.found = true;
    }
    return out;
  }
  const std::vector<long> target = sum_keys(out.r_j, m);
  for (long r = 1; 2 * r < m; ++r) {
    if (product_keys(r, m, pp.q) == target) {
      out.r = r;
      out.found = true;
      break;
    }
  }
  return out;
}

CosineCheck cosine_identity_check(long m, const PrecisionContext* numeric_ctx) {
  CosineCheck check;
  check.m = m;
  const ROfM rm = r_of_m(m);
  if (!rm.found) return check;
  check.r = rm.r;
  const PrimePowers pp = prime_powers(m);
  check.exact = product_keys(rm.r, m, pp.q) == sum_keys(rm.r_j, m);
  if (numeric_ctx != nullptr) {
    const PrecisionContext& ctx = *numeric_ctx;
    const BigReal pi = ctx.pi();
    const long mu = 1L << (pp.q.size() - 1);
    BigReal worst = ctx.real(0);
    for (long n = 0; n < 2 * m; ++n) {
      const long x = 2 * n + 1 - m;
      BigReal lhs = ctx.real(mu);
      for (long q : pp.q) lhs *= cos(pi * Rational(((x % (2 * q)) * (rm.r % (2 * q))) % (2 * q), q));
      BigReal rhs = ctx.real(0);
      for (long r : rm.r_j) rhs += cos(pi * Rational(((x % (2 * m)) * r) % (2 * m), m));
      worst = max(worst, abs(lhs - rhs));
    }
    check.numeric_run = true;
    check.max_residual = worst.to_double();
    check.numeric = worst < pow10(-ctx.digits() / 2, ctx.bits());
  }
  return check;
}

AsymptoticModel AsymptoticModel::build(long m_max) {
  AsymptoticModel model;
  model.m_max = m_max;
  model.r[1] = 0;
  for (long m : s_sequence(m_max)) {
    if (m == 1) continue;
    const ROfM rm = r_of_m(m);
    if (rm.found) model.r[m] = rm.r;
  }
  return model;
}

BigReal c_coeff_with_r(long m, long n, long r, const PrecisionContext& ctx) {
  if (m == 1) return ctx.real(1);
  if (!in_s(m)) return ctx.real(0);
  const PrimePowers pp = prime_powers(m);
  BigReal c = ctx.real(1L << pp.q.size());
  const long x = 2 * n + 1 - m;
  for (long q : pp.q) {
    const long k = (((x % (2 * q)) * (r % (2 * q))) % (2 * q) + 2 * q) % (2 * q);
    c *= cos(ctx.pi() * ratio(k, q));
  }
  return c;
}

BigReal c_coeff(long m, long n, const AsymptoticModel& model, const PrecisionContext& ctx) {
  if (m == 1) return ctx.real(1);
  if (!in_s(m)) return ctx.real(0);
  const auto it = model.r.find(m);
  if (it == model.r.end()) throw DomainError("r(m) not in the model; build it with a larger m_max");
  return c_coeff_with_r(m, n, it->second, ctx);
}

namespace {

// Digits needed to carry 2A(n) ~ e^{n pi} exactly through the subtraction.
PrecisionContext scan_context(long n2) {
  return PrecisionContext(static_cast<int>(std::ceil(1.3644 * static_cast<double>(n2))) + 60);
}

BigReal e_term(long n, long m, const PrecisionContext& ctx) {
  return e_function(ctx.pi() * ratio(2 * n + 1, 2 * m));
}

BigReal signed_target(const FourierTable& table, long n, const PrecisionContext& ctx) {
  BigReal t(Integer(table.A[static_cast<std::size_t>(n)] * 2), ctx.bits());
  return n % 2 == 0 ? t : -t;
}

void check_window(const FourierTable& table, long n1, long n2) {
  if (n1 < 0 || n2 < n1 || n2 >= static_cast<long>(table.A.size())) {
    throw DomainError("window not covered by the Fourier table");
  }
}

}  // namespace

ResidualScan residual_scan(const FourierTable& table, long n1, long n2, long m_max) {
  check_window(table, n1, n2);
  const PrecisionContext ctx = scan_context(n2);
  const AsymptoticModel model = AsymptoticModel::build(m_max);
  ResidualScan scan;
  scan.n1 = n1;
  scan.n2 = n2;
  scan.m_max = m_max;
  scan.next_m = m_max + 1;
  while (!in_s(scan.next_m)) ++scan.next_m;
  scan.predicted_slope = M_PI / static_cast<double>(scan.next_m);
  double coverage_sum = 0;
  for (long n = n1; n <= n2; ++n) {
    BigReal rho = signed_target(table, n, ctx);
    const BigReal target_abs = abs(rho);
    for (const auto& [m, r] : model.r) rho -= c_coeff(m, n, model, ctx) * e_term(n, m, ctx);
    ResidualRow row;
    row.n = n;
    row.log10_abs_residual = abs(rho).log10_abs();
    row.log10_abs_target = target_abs.log10_abs();
    row.coverage = std::clamp(1.0 - row.log10_abs_residual / row.log10_abs_target, 0.0, 1.0);
    coverage_sum += row.coverage;
    scan.rows.push_back(row);
  }
  scan.mean_coverage = coverage_sum / static_cast<double>(scan.rows.size());

  // Least-squares slope through block maxima of ln|rho|; blocks span two
  // periods of the leading omitted cosine so its zeros do not bias the fit.
  const long block = std::max<long>(2 * scan.next_m, 10);
  std::vector<double> xs, ys;
  for (std::size_t start = 0; start < scan.rows.size(); start += static_cast<std::size_t>(block)) {
    const std::size_t end = std::min(scan.rows.size(), start + static_cast<std::size_t>(block));
    if (end - start < static_cast<std::size_t>(block) / 2) break;
    auto best = std::max_element(scan.rows.begin() + static_cast<std::ptrdiff_t>(start),
                                 scan.rows.begin() + static_cast<std::ptrdiff_t>(end),
                                 [](const ResidualRow& a, const ResidualRow& b) {
                                   return a.log10_abs_residual < b.log10_abs_residual;
                                 });
    xs.push_back(static_cast<double>(best->n));
    ys.push_back(best->log10_abs_residual * std::log(10.0));
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    scan.decay_slope = sxy / sxx;
  }
  return scan;
}

std::string residual_scan_csv(const ResidualScan& scan) {
  std::ostringstream out;
  out << "n,log10_abs_residual,digits_explained\n";
  out.precision(10);
  for (const auto& row : scan.rows) out << row.n << ',' << row.log10_abs_residual << ',' << row.coverage << '\n';
  return out.str();
}

CoefficientFit fit_unknown_c(const FourierTable& table, long n1, long n2, long m) {
  check_window(table, n1, n2);
  if (m < 1) throw DomainError("m must be positive");
  const PrecisionContext ctx = scan_context(n2);
  const AsymptoticModel model = AsymptoticModel::build(m - 1);
  const auto classes = static_cast<std::size_t>(m);
  std::vector<BigReal> num(classes, ctx.real(0)), den(classes, ctx.real(0));
  std::vector<long> representative(classes, -1);
  for (long n = n1; n <= n2; ++n) {
    BigReal rho = signed_target(table, n, ctx);
    for (const auto& [mm, r] : model.r) rho -= c_coeff(mm, n, model, ctx) * e_term(n, mm, ctx);
    const BigReal e = e_term(n, m, ctx);
    const auto cls = static_cast<std::size_t>(n % m);
    num[cls] += rho * e;
    den[cls] += e * e;
    if (representative[cls] < 0) representative[cls] = n;
  }
  CoefficientFit fit;
  fit.m = m;
  for (std::size_t c = 0; c < classes; ++c) {
    const double est = den[c].is_zero() ? 0.0 : (num[c] / den[c]).to_double();
    fit.estimate.push_back(est);
    fit.max_abs_estimate = std::max(fit.max_abs_estimate, std::fabs(est));
  }
  auto error_for = [&](long r) {
    double worst = 0;
    for (std::size_t c = 0; c < classes; ++c) {
      if (representative[c] < 0) continue;
      worst = std::max(worst, std::fabs(fit.estimate[c] - c_coeff_with_r(m, representative[c], r, ctx).to_double()));
    }
    return worst;
  };
  if (m == 1) {
    fit.predicted = {1.0};
    fit.max_abs_error = std::fabs(fit.estimate[0] - 1.0);
    return fit;
  }
  if (!in_s(m)) {
    fit.predicted.assign(classes, 0.0);
    fit.max_abs_error = fit.max_abs_estimate;
    return fit;
  }
  const ROfM rm = r_of_m(m);
  for (std::size_t c = 0; c < classes; ++c) {
    const long n = representative[c] < 0 ? static_cast<long>(c) : representative[c];
    fit.predicted.push_back(rm.found ? c_coeff_with_r(m, n, rm.r, ctx).to_double() : 0.0);
  }
  fit.max_abs_error = rm.found ? error_for(rm.r) : fit.max_abs_estimate;
  double best = INFINITY;
  for (long r = 1; 2 * r < m; ++r) {
    const double e = error_for(r);
    if (e < best) {
      best = e;
      fit.best_r = r;
    }
  }
  return fit;
}

std::string singularity_report_json(const std::vector<ROfM>& results, const std::vector<CosineCheck>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const ROfM& rm = results[i];
    nlohmann::json item;
    item["m"] = rm.m;
    item["r"] = rm.r;
    nlohmann::json ws = nlohmann::json::array();
    nlohmann::json matrices = nlohmann::json::array();
    for (const auto& s : rm.set.data) {
      ws.push_back(s.w);
      matrices.push_back({s.a, s.b, s.c, s.d});
    }
    item["w"] = std::move(ws);
    item["matrices"] = std::move(matrices);
    bool verified = rm.found && rm.set.violations.empty();
    if (i < checks.size()) verified = verified && checks[i].exact && (!checks[i].numeric_run || checks[i].numeric);
    item["verified"] = verified;
    out.push_back(std::move(item));
  }
  return out.dump(2);
}

}  // namespace magagm
