#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "cli.hpp"

using magagm::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"High-precision evaluation and verification for the magnetic double integral I2(f)"};
  app.require_subcommand(1);

  RunConfig config;
  config.precision_digits = magagm::cli::default_precision();
  std::string window;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prec", config.precision_digits, "Decimal digits (default 50 or $MAGAGM_PRECISION)")
        ->check(CLI::Range(10, 100000));
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", config.out, "Also write the result to this file");
  };

  std::string f;
  auto* eval = app.add_subcommand("eval", "Evaluate I2(f) with its reduction trace");
  eval->add_option("--f", f, "Argument f (decimal, f != -1)")->required();
  eval->add_flag("--oracle", config.oracle, "Cross-check against 2D tanh-sinh quadrature (up to 50 digits)");
  add_common(eval);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(magagm::cli::suites()));
  verify->add_option("--terms", config.terms, "Suite scale (series order, table size, n_max)")->check(CLI::PositiveNumber);
  verify->add_option("--mmax", config.mmax, "Largest m for the singularity sweep")->check(CLI::PositiveNumber);
  verify->add_option("--window", window, "Residual-scan window N1:N2");
  verify->add_option("--seed", config.seed, "Seed for randomized checks");
  add_common(verify);

  std::string kind;
  int count = 10;
  auto* coeffs = app.add_subcommand("coeffs", "Print an exact coefficient table");
  coeffs->add_option("--kind", kind, "a, A, c, T or S0")->required()->check(CLI::IsMember({"a", "A", "c", "T", "S0"}));
  coeffs->add_option("--count", count, "Number of coefficients")->check(CLI::PositiveNumber);
  add_common(coeffs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : magagm::cli::kUsageError;
  }

  if (!window.empty()) {
    std::smatch m;
    if (!std::regex_match(window, m, std::regex(R"((\d+):(\d+))")) || std::stol(m[1]) >= std::stol(m[2])) {
      std::cerr << "error: --window expects N1:N2 with N1 < N2\n";
      return magagm::cli::kUsageError;
    }
    config.window = std::make_pair(std::stol(m[1]), std::stol(m[2]));
  }

  if (*eval) return magagm::cli::cmd_eval(f, config, std::cout, std::cerr);
  if (*verify) return magagm::cli::cmd_verify(suite, config, std::cout, std::cerr);
  return magagm::cli::cmd_coeffs(kind, count, config, std::cout, std::cerr);
}
