// Acceptance battery runner: one pass/fail line per criterion, nonzero exit
// if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const ceswit::SuiteReport rep = ceswit::run_acceptance_suite(seed);
  for (const auto& c : rep.criteria) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name;
    if (!c.pass) std::cout << "\n       " << c.detail;
    std::cout << "\n";
  }
  std::cout << (rep.all_pass ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return rep.all_pass ? 0 : 1;
}
