#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "magagm/asymptotics.hpp"
#include "magagm/certificates.hpp"
#include "magagm/errors.hpp"
#include "magagm/integral.hpp"
#include "magagm/laurent.hpp"
#include "magagm/modular.hpp"
#include "magagm/rational.hpp"

namespace magagm::cli {

namespace {

using json = nlohmann::json;

std::string sci(const BigReal& x) { return x.is_zero() ? "0" : x.to_string(3); }

std::string fixed(double x, int decimals) {
  std::ostringstream os;
  os.precision(decimals);
  os << std::fixed << x;
  return os.str();
}

const std::vector<std::string> kReferenceC = {"7/15",
                                          "57/175",
                                          "47953/482625",
                                          "28647821/1206079875",
                                          "21064211/3897196875",
                                          "140089261833377/118706391513084375",
                                          "7572730553099/30813510149296875",
                                          "7162997611208195563/144310550800696358203125"};

const std::vector<long> kReferenceA = {1,         -44,        1126,          -27096,         640909,
                                   -15036548, 351245038, -8183857544L, 190367634194L, -4423279591132L};

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

void suite_involution(const RunConfig& c, Report& r) {
  PrecisionContext ctx(c.precision_digits);
  std::mt19937_64 rng(c.seed);
  const int count = pick(c.terms, 20);
  const BigReal tol = pow10(-(c.precision_digits - 10), ctx.bits());
  for (int i = 0; i < count; ++i) {
    Integer k = rng() | 1U;
    BigReal f = ldexp(BigReal(k, ctx.bits()), -64);
    BigReal res = abs(i2_direct_series(f, ctx) - i2_direct_series((1L - f) / (1L + f), ctx));
    r.items.push_back({"involution f=" + f.to_string(12), res < tol, "residual " + sci(res)});
  }
}

void suite_theorem1(const RunConfig& c, Report& r) {
  const int n = pick(c.terms, 40);
  SeriesResidual res = verify_theorem1(n);
  r.items.push_back({"theorem1 order " + std::to_string(res.order), res.zero(),
                     res.zero() ? "exact" : "first nonzero coefficient " + std::to_string(res.first_nonzero)});
  r.items.push_back({"theorem1 pi^2 parts", res.pi2_part_zero, res.pi2_part_zero ? "cancel" : "do not cancel"});
}

void suite_theorem2(const RunConfig& c, Report& r) {
  const int n = pick(c.terms, 50);
  SeriesResidual res = verify_theorem2(n);
  r.items.push_back({"theorem2 order " + std::to_string(res.order), res.zero(),
                     res.zero() ? "exact" : "first nonzero coefficient " + std::to_string(res.first_nonzero)});
}

void suite_lemma2(const RunConfig& c, Report& r) {
  PrecisionContext ctx(c.precision_digits);
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.5, 1.5);
  const int count = pick(c.terms, 5);
  for (int i = 0; i < count; ++i) {
    BigComplex tau = ctx.complex(BigReal(re(rng), ctx.bits()), BigReal(im(rng), ctx.bits()));
    Lemma2Report rep = verify_lemma2(tau, ctx);
    r.items.push_back({"lemma2 tau=" + tau.to_string(6), rep.passed,
                       "shift " + sci(rep.shift_residual) + ", inversion " + sci(rep.inversion_residual)});
  }
  auto at = [&](long num, long den) { return phi_eval(ctx.complex(ctx.real(0), ctx.real(ratio(num, den))), ctx); };
  const BigReal tol = ctx.tolerance();
  BigComplex p1 = at(1, 1), ph = at(1, 2), p2 = at(2, 1), pq = at(1, 4);
  BigReal r1 = abs(p1 * 4L + ph) / abs(p1);
  BigReal r2 = abs(p2 * 64L + pq) / abs(p2);
  r.items.push_back({"phi(i) = -phi(i/2)/4", r1 < tol, "relative residual " + sci(r1)});
  r.items.push_back({"phi(2i) = -phi(i/4)/64", r2 < tol, "relative residual " + sci(r2)});
}

void suite_conjecture1(const RunConfig& c, Report& r, std::ostream& progress) {
  const int n = pick(c.terms, 1000);
  progress << "building Fourier table to n = " << n << "\n";
  FourierTable t = phi_qexp(n);
  bool list = true;
  for (std::size_t i = 0; i < kReferenceA.size() && i < t.A.size(); ++i) list = list && t.A[i] == kReferenceA[i];
  r.items.push_back({"A(0..9) regression", list, list ? "match" : "mismatch"});
  std::string detail = std::to_string(t.truncation + 1 - t.violations.size()) + " integers confirmed";
  if (!t.integral()) detail += ", first failure at n = " + std::to_string(t.violations.front());
  r.items.push_back({"A(n) integral for n <= " + std::to_string(t.truncation), t.integral(), detail});
}

void suite_conjecture2(const RunConfig& c, Report& r, std::ostream& progress) {
  const long mmax = c.mmax > 0 ? c.mmax : 5000;
  progress << "checking the cosine identity for m <= " << mmax << "\n";
  for (long m : {65L, 1105L, 2017L}) {
    if (m > mmax) continue;
    ROfM v = r_of_m(m);
    r.items.push_back({"r(" + std::to_string(m) + ")", v.found, "r = " + std::to_string(v.r)});
  }
  long checked = 0, failed = 0, first_bad = 0;
  for (long m : s_sequence(mmax)) {
    if (m < 5) continue;
    ++checked;
    if (!cosine_identity_check(m).exact) {
      if (failed++ == 0) first_bad = m;
    }
  }
  r.items.push_back({"cosine identity m <= " + std::to_string(mmax), failed == 0,
                     std::to_string(checked - failed) + "/" + std::to_string(checked) +
                         (failed ? ", first failure m = " + std::to_string(first_bad) : "")});

  const auto [n1, n2] = c.window.value_or(std::make_pair(200L, 400L));
  progress << "residual scan over [" << n1 << ", " << n2 << "]\n";
  FourierTable t = phi_qexp(static_cast<int>(n2));
  ResidualScan s1 = residual_scan(t, n1, n2, 1);
  ResidualScan s5 = residual_scan(t, n1, n2, 5);
  r.items.push_back({"coverage M_max=1", std::abs(s1.mean_coverage - 0.80) <= 0.03, fixed(s1.mean_coverage, 4)});
  r.items.push_back({"coverage M_max=5", s5.mean_coverage > 0.89, fixed(s5.mean_coverage, 4)});
  r.items.push_back({"residual decay after M_max=5", std::abs(s5.decay_slope - s5.predicted_slope) <= 0.1 * s5.predicted_slope,
                     fixed(s5.decay_slope, 5) + " vs pi/" + std::to_string(s5.next_m) + " = " +
                         fixed(s5.predicted_slope, 5)});
}

void suite_laurent(const RunConfig& c, Report& r, std::ostream& progress) {
  const int n = std::max(pick(c.terms, 20), 8);
  progress << "Laurent coefficients to n = " << n << "\n";
  LaurentResult res = phi_laurent(laurent_order_for(n));
  bool match = true;
  for (std::size_t i = 0; i < kReferenceC.size(); ++i) match = match && res.c[i].get_str() == kReferenceC[i];
  r.items.push_back({"c1..c8", match, match ? "match" : "mismatch"});
  r.items.push_back({"z^j pattern", res.off_pattern_log10 < -0.5 * res.digits,
                     "largest off-pattern coefficient 1e" + fixed(res.off_pattern_log10, 1)});
  CnPropertyReport props = cn_properties(res, n);
  std::string bad;
  for (const auto& row : props.rows)
    if (!row.detail.empty() && bad.empty()) bad = "n = " + std::to_string(row.n) + ": " + row.detail;
  r.items.push_back({"properties (a)-(c) n <= " + std::to_string(n), props.passed, props.passed ? "hold" : bad});
  if (n >= 10) {
    CnAsymptoticReport asym = cn_asymptotic_check(res, 10);
    r.items.push_back({"c_n D^n/(8n-6) envelope", asym.passed,
                       "max ratio to (5/8)^{2n} " + fixed(asym.max_envelope, 3) + ", sign changes " +
                           std::to_string(asym.sign_changes)});
  }
  const int target = std::min(40, n);
  SumRuleReport sr = sum_rule_check(res, target, n);
  r.items.push_back({"sum rule to " + std::to_string(target) + " digits", sr.passed,
                     "log10|LHS-1| = " + fixed(sr.log10_deviation, 2)});
}

void suite_certificates(const RunConfig& c, Report& r, std::ostream& progress) {
  PrecisionContext ctx(30);
  progress << "certificate grids\n";
  auto add = [&](const CertificateReport& rep) {
    r.items.push_back({rep.name + " (" + rep.grid + ")", rep.passed,
                       std::to_string(rep.checked - rep.failures) + "/" + std::to_string(rep.checked)});
  };
  add(telescoping_grid(12, 12));
  add(verify_r3_grid(20, ctx));
  add(verify_ir_grid(50));
  SeriesResidual fin = verify_theorem2(50);
  r.items.push_back({"final recursion (order 50)", fin.zero(), fin.zero() ? "exact" : "residual"});
  TRecursionReport t = verify_t_recursion(40);
  r.items.push_back({"T recursion and generating function", t.passed(), t.passed() ? "exact" : "mismatch"});
  Eq1Report eq = verify_eq1_end_to_end(BigReal("0.5", ctx.bits()), 20);
  r.items.push_back({"Y(1/2) three-way agreement", eq.passed, "spread 1e" + fixed(eq.log10_max_spread, 1)});
  (void)c;
}

std::string scale_json(const RunConfig& c) {
  json s;
  s["prec"] = c.precision_digits;
  s["terms"] = c.terms;
  s["mmax"] = c.mmax;
  s["seed"] = c.seed;
  if (c.window) s["window"] = {c.window->first, c.window->second};
  return s.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << text;
  return true;
}

}  // namespace

int default_precision() {
  if (const char* env = std::getenv("MAGAGM_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 10 && v <= 100000) return static_cast<int>(v);
  }
  return 50;
}

bool Report::passed() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return !items.empty();
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") {
    json j;
    j["suite"] = report.suite;
    j["scale"] = json::parse(report.scale);
    j["items"] = json::array();
    for (const auto& i : report.items) {
      j["items"].push_back({{"name", i.name}, {"status", i.pass ? "pass" : "fail"}, {"detail", i.detail}});
    }
    j["wall_time_ms"] = report.wall_time_ms;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "name,status,detail\n";
    for (const auto& i : report.items)
      os << csv_escape(i.name) << "," << (i.pass ? "pass" : "fail") << "," << csv_escape(i.detail) << "\n";
    return os.str();
  }
  for (const auto& i : report.items) os << (i.pass ? "PASS " : "FAIL ") << i.name << ": " << i.detail << "\n";
  os << report.suite << ": " << (report.passed() ? "pass" : "fail") << " (" << report.wall_time_ms << " ms)\n";
  return os.str();
}

const std::vector<std::string>& suites() {
  static const std::vector<std::string> names = {"involution",  "theorem1",    "theorem2", "lemma2",      "conjecture1",
                                                 "conjecture2", "laurent",     "certificates", "all"};
  return names;
}

Report run_suite(const std::string& suite, const RunConfig& config, std::ostream& progress) {
  Report report;
  report.suite = suite;
  report.scale = scale_json(config);
  const auto t0 = std::chrono::steady_clock::now();
  auto one = [&](const std::string& name) {
    if (name == "involution") suite_involution(config, report);
    else if (name == "theorem1") suite_theorem1(config, report);
    else if (name == "theorem2") suite_theorem2(config, report);
    else if (name == "lemma2") suite_lemma2(config, report);
    else if (name == "conjecture1") suite_conjecture1(config, report, progress);
    else if (name == "conjecture2") suite_conjecture2(config, report, progress);
    else if (name == "laurent") suite_laurent(config, report, progress);
    else if (name == "certificates") suite_certificates(config, report, progress);
    else throw DomainError("unknown suite '" + name + "'");
  };
  if (suite == "all") {
    // Suite-specific scale flags keep their defaults in the combined run.
    for (const auto& name : suites())
      if (name != "all") one(name);
  } else {
    one(suite);
  }
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

int cmd_eval(const std::string& f_text, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    PrecisionContext ctx(config.precision_digits);
    BigReal f = ctx.parse(f_text);
    if (!f.is_finite()) throw DomainError("cannot parse f = '" + f_text + "'");
    BigReal value = i2_eval_checked(f, ctx);
    ReductionTrace trace = reduce_f(f, ctx);
    std::optional<BigReal> delta;
    if (config.oracle) {
      // The quadrature oracle covers |f| < 1 and at most 50 digits; larger f go through inversion.
      const int d = std::min(config.precision_digits, 50);
      BigReal q = abs(f) < 1L ? i2_quadrature(f, d) : i2_quadrature(1L / f, d) / f;
      delta = abs(q - value);
    }
    if (config.format == "json") {
      json j;
      j["f"] = f_text;
      j["digits"] = config.precision_digits;
      j["value"] = value.to_string(config.precision_digits);
      j["trace"] = json::array();
      for (const auto& s : trace.steps)
        j["trace"].push_back({{"kind", to_string(s.kind)}, {"from", s.from.to_string(20)}, {"to", s.to.to_string(20)}});
      j["reduced_f"] = trace.final_f.to_string(20);
      if (delta) j["oracle_delta"] = sci(*delta);
      out << j.dump(2) << "\n";
    } else if (config.format == "csv") {
      out << "f,value" << (delta ? ",oracle_delta" : "") << "\n";
      out << f_text << "," << value.to_string(config.precision_digits) << (delta ? "," + sci(*delta) : "") << "\n";
    } else {
      out << "I2(" << f_text << ") = " << value.to_string(config.precision_digits) << "\n";
      for (const auto& s : trace.steps)
        out << "  " << to_string(s.kind) << ": " << s.from.to_string(20) << " -> " << s.to.to_string(20) << "\n";
      out << "  reduced f = " << trace.final_f.to_string(20) << "\n";
      if (delta) out << "  quadrature delta = " << sci(*delta) << "\n";
    }
    return kPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out, std::ostream& err) {
  bool known = false;
  for (const auto& s : suites()) known = known || s == suite;
  if (!known) {
    err << "error: unknown suite '" << suite << "'\n";
    return kUsageError;
  }
  Report report;
  try {
    report = run_suite(suite, config, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    report.items.push_back({"exception", false, e.what()});
  }
  out << render(report, config.format);
  if (!config.out.empty()) {
    const std::string fmt = config.format == "text" ? "json" : config.format;
    if (!write_file(config.out, render(report, fmt), err)) return kUsageError;
  }
  if (!report.passed()) {
    for (const auto& i : report.items) {
      if (!i.pass) {
        err << "first failure: " << i.name << " (" << i.detail << ")\n";
        break;
      }
    }
    return kVerifyFailed;
  }
  return kPass;
}

int cmd_coeffs(const std::string& kind, int count, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (count < 1) {
    err << "error: count must be at least 1\n";
    return kUsageError;
  }
  // Rows of exact strings; S0 has two columns (rational part, coefficient of pi^2).
  std::vector<std::string> header{"n", "value"};
  std::vector<std::vector<std::string>> rows;
  try {
    if (kind == "a") {
      auto a = a_coeffs(count - 1);
      for (int n = 0; n < count; ++n) rows.push_back({std::to_string(n), a[n].get_str()});
    } else if (kind == "A") {
      FourierTable t = phi_qexp(count - 1);
      for (int n = 0; n < count; ++n) rows.push_back({std::to_string(n), t.A[n].get_str()});
      if (!t.integral()) err << "warning: non-integral entries at n = " << t.violations.front() << "\n";
    } else if (kind == "c") {
      LaurentResult r = phi_laurent(laurent_order_for(count));
      for (int n = 1; n <= count; ++n) rows.push_back({std::to_string(n), r.c[n - 1].get_str()});
    } else if (kind == "T") {
      auto t = t_coeffs(count - 1);
      for (int n = 0; n < count; ++n) rows.push_back({std::to_string(n), t[n].get_str()});
    } else if (kind == "S0") {
      header = {"n", "rational", "pi2"};
      auto s = y_coeffs(count - 1);
      for (int n = 0; n < count; ++n)
        rows.push_back({std::to_string(n), s[n].rational_part().get_str(), s[n].pi2_part().get_str()});
    } else {
      err << "error: unknown coefficient kind '" << kind << "' (a, A, c, T, S0)\n";
      return kUsageError;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::ostringstream os;
  if (config.format == "json") {
    json j = json::array();
    for (const auto& row : rows) {
      json item;
      for (std::size_t i = 0; i < header.size(); ++i) item[header[i]] = i == 0 ? json(std::stol(row[i])) : json(row[i]);
      j.push_back(item);
    }
    os << j.dump(2) << "\n";
  } else {
    const char* sep = config.format == "csv" ? "," : " ";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? sep : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? sep : "") << row[i];
      os << "\n";
    }
  }
  out << os.str();
  if (!config.out.empty() && !write_file(config.out, os.str(), err)) return kUsageError;
  return kPass;
}

}  // namespace magagm::cli
