#pragma once

#include <string>
#include <vector>

namespace zstab {

struct CriterionResult {
  int id = 0;
  std::string description;
  bool pass = false;
  double elapsed_ms = 0.0;
  double budget_ms = 0.0;  // 0 = untimed
  std::string detail;      // deterministic summary of the computed values
};

// Runs the golden-value criteria end-to-end from the shipped example files
// in data_dir. Results are deterministic given the same inputs.
std::vector<CriterionResult> run_selftest(const std::string& data_dir);

// Deterministic serialization of the results (timings excluded).
std::string selftest_fingerprint(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace zstab
