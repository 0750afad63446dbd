#pragma once

#include <string>
#include <vector>

namespace ckdse::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

// Runs the twelve acceptance criteria. weight_cap (>= 4, default 5)
// applies to the criteria whose order is a free parameter; golden-value
// criteria keep their intrinsic orders.
std::vector<CriterionResult> run_all(int weight_cap = 5);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ckdse::acceptance
