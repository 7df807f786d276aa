#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlift {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Upper bound on the order used by randomized sweeps and by the
  /// exhaustive small-case sweeps. Fixed small configurations always run.
  int n_max = 8;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::uint64_t checks = 0;
  std::string detail;  ///< reported values, or the first failure
};

/// One suite per verified structural statement.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts = {});

/// Fixed-width report, one line per suite; byte-identical for a fixed seed.
std::string format_suite_table(const std::vector<SuiteResult>& results);

}  // namespace hyperlift
