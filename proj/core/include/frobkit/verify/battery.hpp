#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobkit::verify {

inline constexpr int kCriteria = 10;

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  // 0: no time limit
};

struct BatteryOptions {
  std::uint64_t seed = 20240601;
  bool quick = false;  // smaller instance sets, for interactive use
};

/// Runs one acceptance criterion (1..kCriteria). Exceptions are caught and
/// reported as failures.
CheckResult run_criterion(int id, const BatteryOptions& options = {});
std::vector<CheckResult> run_battery(const BatteryOptions& options = {});

}  // namespace frobkit::verify
