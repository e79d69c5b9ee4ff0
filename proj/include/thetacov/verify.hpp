#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thetacov {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int dmax = 5;
  int N = 30;
  uint64_t seed = 12345;
  int trials = 1000;
  int jobs = 1;
};

// Suites: mass-agreement, lift-structure, burnside, oracle, euler, log-identity,
// arf-welldef. Unknown names throw std::invalid_argument.
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& opt);

std::vector<std::string> verify_suite_names();

} // namespace thetacov
