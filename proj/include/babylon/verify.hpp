#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace babylon {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;                  // expected/actual on failure, summary on pass
  std::vector<std::string> warnings;   // anomalies reported, never failures
};

struct VerifyOptions {
  /// Ceiling for the isolated-vertex sweep (criterion: exactly {1, 2}).
  std::uint32_t isolated_scan_limit = 1'000'000;
};

/// Runs the full battery of published-reference checks; one result per
/// criterion, in order. Passing means value match within the stated
/// tolerance and inside the stated runtime budget.
std::vector<CheckResult> run_reference_suite(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace babylon
