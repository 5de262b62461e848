#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace ceswit {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

// Runs the full acceptance battery (ten criteria) at the pinned tolerances.
SuiteReport run_acceptance_suite(std::uint64_t seed,
                                 const ToleranceConfig& tol = {});

}  // namespace ceswit
