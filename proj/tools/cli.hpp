#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace magagm::cli {

enum ExitCode { kPass = 0, kVerifyFailed = 1, kUsageError = 2 };

struct RunConfig {
  int precision_digits = 50;
  int terms = 0;  // 0 selects the suite default
  long mmax = 0;  // 0 selects the suite default
  std::optional<std::pair<long, long>> window;
  std::string format = "text";  // json, csv or text
  std::string out;              // report path, empty for none
  std::uint64_t seed = 1;
  bool oracle = false;
};

// 50, or the value of MAGAGM_PRECISION when set.
int default_precision();

struct ReportItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::string scale;  // JSON object text
  std::vector<ReportItem> items;
  long wall_time_ms = 0;
  bool passed() const;
};

std::string render(const Report& report, const std::string& format);

const std::vector<std::string>& suites();

int cmd_eval(const std::string& f, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out, std::ostream& err);
// kind is one of a, A, c, T, S0.
int cmd_coeffs(const std::string& kind, int count, const RunConfig& config, std::ostream& out, std::ostream& err);

// Runs a suite without printing.
Report run_suite(const std::string& suite, const RunConfig& config, std::ostream& progress);

}  // namespace magagm::cli
