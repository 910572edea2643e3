#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wreath {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// oracles, burnside, formulas, bounds, semiprimitive.
const std::vector<std::string>& suite_names();

/// Runs one cross-check suite, writing one line per case (with expected and
/// actual values on failure). Unknown names throw InvalidArgument.
SuiteResult run_suite(const std::string& name, std::ostream& log, std::uint64_t seed = 1);

}  // namespace wreath
