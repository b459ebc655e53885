#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netwave::checks {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int instances = 200;  // size of the randomized path and pair corpora
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long instances = 0;  // instances actually checked
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 when unbounded
  std::string detail;        // first failure, or a summary
};

/// The ten randomized and exhaustive checks, in order.
std::vector<CriterionResult> run_suite(const SuiteConfig& config);

/// One check by id (1..10).
CriterionResult run_criterion(int id, const SuiteConfig& config);

std::string format_result(const CriterionResult& result);

}  // namespace netwave::checks
