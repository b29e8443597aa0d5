#pragma once

// Invariant suites behind `hycat check`.

#include <cstdint>
#include <string>
#include <vector>

namespace hycat {

struct CheckConfig {
  std::uint64_t seed{20240607};
  int n_curves{100};
  double r{1.0};
  std::string only;  // empty = all families
};

struct CheckResult {
  std::string family;
  std::string name;
  int samples{0};
  double max_residual{0.0};
  double tolerance{0.0};
  bool passed{false};
  std::string note;
};

/// Families: metric-pullback, curvature, killing, mean-curvature, horocatenary.
const std::vector<std::string>& check_families();

/// Runs the selected families; UsageError for an unknown --only value.
std::vector<CheckResult> run_checks(const CheckConfig& config);

}  // namespace hycat
