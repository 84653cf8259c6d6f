#pragma once

#include <string>
#include <vector>

namespace acceptance {

struct CriterionResult {
  int id = 0;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> notes;  // what was measured; mismatches first
};

inline constexpr int kCriterionCount = 11;

// Runs one criterion (1..11). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

// "criterion N: PASS (1.23 s) ..." on one line.
std::string format_line(const CriterionResult& r);

}  // namespace acceptance
