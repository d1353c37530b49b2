// Acceptance runner: executes every check suite and prints one line per
// criterion. Exit code 0 only when everything passes.

#include "hjp/verify.hpp"

#include <iostream>

int main() {
  const std::vector<hjp::CheckResult> results = hjp::run_suite("all", &std::cout);
  std::size_t passed = 0;
  for (const hjp::CheckResult& result : results)
    if (result.pass) ++passed;
  std::cout << passed << "/" << results.size() << " acceptance criteria passed\n";
  return passed == results.size() ? 0 : 1;
}
