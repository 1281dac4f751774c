#ifndef COXCANON_ACCEPTANCE_HPP_
#define COXCANON_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace coxcanon {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteInfo {
  int id;
  const char* name;
  const char* summary;
};

/// The thirteen acceptance checks, in order.
const std::vector<SuiteInfo>& acceptance_suites();

CheckResult run_acceptance(int id);
/// "all", a suite name, or a decimal id.
std::vector<CheckResult> run_acceptance(const std::string& which);

}  // namespace coxcanon

#endif  // COXCANON_ACCEPTANCE_HPP_
