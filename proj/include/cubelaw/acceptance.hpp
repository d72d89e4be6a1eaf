#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cubelaw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the nine acceptance suites with the given seed. Progress and any
/// oracle reproducers go to `log`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& log);

/// "[PASS] 3 round-trip ...: detail"
std::string format_result(const CriterionResult& r);

}  // namespace cubelaw
