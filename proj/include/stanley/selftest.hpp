#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stanley {

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Acceptance criteria, numbered 1..8. Each run is deterministic (fixed
/// seeds) and fails if it exceeds its time limit.
int criterion_count();
CriterionReport run_criterion(int id);
std::vector<CriterionReport> run_selftest(
    const std::function<void(const CriterionReport&)>& on_done = {});

}  // namespace stanley
