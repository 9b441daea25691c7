#pragma once

// Verification suites: every theorem-backed count formula, the
// classifier-versus-determinant agreement grid, the identity and incidence
// oracles, and the bound checks, each reported as a named pass/fail line.

#include <string>
#include <vector>

namespace genfermat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  /// Self-test hook: perturbs one expected formula constant so the suite
  /// must report a failure.
  bool corrupt_formula_constant = false;
};

/// suite is one of "formulas", "classification", "bounds", "all".
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace genfermat
