#include "criteria.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::vector<acceptance::CriterionResult> results;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) results.push_back(acceptance::run_criterion(std::atoi(argv[i])));
  } else {
    results = acceptance::run_all();
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << acceptance::format_line(r) << '\n';
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
