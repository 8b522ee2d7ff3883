#pragma once
#include <string>
#include <vector>

namespace homoflow {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // worst measured value vs its threshold
};

// Curated library invariant suite, cheap enough to run on every install.
// inject_error perturbs the closed form fed to the residual property -- the
// negative control that proves the suite can fail.
std::vector<CheckResult> run_verification(bool inject_error = false);

}  // namespace homoflow
