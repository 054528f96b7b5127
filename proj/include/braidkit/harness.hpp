#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

enum class CheckStatus { pass, fail, error, skip };

/// Outcome of one identity or hypothesis check. Instances are identified
/// by (id, variant, params); the triple is unique within a report.
struct CheckResult {
  std::string id;
  std::string variant;
  std::vector<std::pair<std::string, long long>> params;
  CheckStatus status = CheckStatus::error;
  std::string witness;
  long long ms = 0;
};

struct Summary {
  long long pass = 0, fail = 0, error = 0, skip = 0;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;  // sorted by id, variant, params
  Summary summary() const;
};

struct SuiteOptions {
  int n_lo = 5;
  int n_hi = 8;
  std::uint64_t seed = 0;
  int samples = 100;
  /// 0 = all hardware threads, 1 = serial reference execution.
  int threads = 0;
  /// Measured per-check wallclock is zeroed unless set, so identical
  /// inputs serialize to identical bytes.
  bool timings = false;
  /// Tolerance handed to the matrix checks; integral inputs stay exact.
  double tol = 1e-9;
};

/// Runs the full catalog of identity and hypothesis checks for every
/// strand count in [n_lo, n_hi] (bounds within [2, 12]). Checks are pure
/// and run in parallel; the report ordering is schedule independent.
Report run_suite(const SuiteOptions& opts);

std::string emit_json(const Report& report);
std::string emit_text(const Report& report);

/// 0 all pass, 1 any fail, 2 any internal error.
int report_exit_code(const Report& report);

inline constexpr const char* kSuiteVersion = "1.0.0+splitmix64.v1";

}  // namespace braidkit
