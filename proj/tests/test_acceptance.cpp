// Acceptance runner: prints one pass/fail line per criterion and exits
// non-zero if any criterion fails.
#include <cstdlib>
#include <iostream>

#include "ckdse/selftest.hpp"

int main(int argc, char** argv) {
  int weight = 5;
  if (argc > 1) weight = std::atoi(argv[1]);
  auto results = ckdse::acceptance::run_all(weight);
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] "
              << r.name << ": " << r.detail << "\n";
  }
  return ckdse::acceptance::all_passed(results) ? 0 : 1;
}
