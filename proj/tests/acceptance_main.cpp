// Acceptance suite: runs every golden-value criterion at its stated
// tolerance, one pass/fail line per criterion, plus the end-to-end
// determinism check. Exit code 0 iff everything passes.

#include <cstring>
#include <iostream>
#include <string>

#include "zstab/selftest.hpp"

int main(int argc, char** argv) {
  std::string data_dir = "inputs";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--data") == 0) data_dir = argv[i + 1];
  }

  auto results = zstab::run_selftest(data_dir);
  bool ok = zstab::all_pass(results);
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
              << r.description;
    if (r.budget_ms > 0)
      std::cout << " [" << r.elapsed_ms << " ms, budget " << r.budget_ms << " ms]";
    else
      std::cout << " [" << r.elapsed_ms << " ms]";
    std::cout << "\n";
    if (!r.pass) std::cout << "    detail: " << r.detail << "\n";
  }

  // Criterion 10: the suite is deterministic across runs.
  auto again = zstab::run_selftest(data_dir);
  bool deterministic =
      zstab::selftest_fingerprint(results) == zstab::selftest_fingerprint(again);
  std::cout << (deterministic ? "PASS" : "FAIL")
            << " criterion 10: selftest deterministic across runs\n";
  ok = ok && deterministic;

  std::cout << (ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return ok ? 0 : 1;
}
