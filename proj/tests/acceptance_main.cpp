// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "indsub/acceptance.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all = true;
  indsub::run_acceptance(only, [&](const indsub::CriterionResult& r) {
    std::cout << indsub::format_result(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
