#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffdist::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  /// wall-clock budget for the criterion; exceeding it fails the criterion
  double budget_seconds = 0.0;
};

/// Criterion ids in execution order (1 through 10).
std::vector<int> criterion_ids();

/// Runs a single criterion with its fixed seeds. Throws std::out_of_range for unknown ids.
CriterionResult run_criterion(int id);

/// Runs `ids` in order, writing one "[PASS]/[FAIL] <id> <title>: <detail>" line per
/// criterion to `log` as soon as it finishes.
std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::ostream& log);

std::string format_line(const CriterionResult& r);

}  // namespace ffdist::acceptance
