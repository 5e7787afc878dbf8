#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubline {

// One reproduction check: a named claim about the built-in arrangements or
// the enumeration machinery, recomputed from scratch and compared against
// its expected value. Names are group/subject, e.g. "freeness/EL6".
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // computed evidence, or the failure message
};

struct CheckOptions {
  std::string group;       // run only this group; empty means all
  double tol = 1e-9;       // numeric census tolerance
  std::uint64_t seed = 0;  // base seed for the randomized checks
};

std::vector<std::string> check_groups();

// Runs the selected checks. Throws NotApplicable when the group filter
// matches nothing; individual check failures are reported, not thrown.
std::vector<CheckResult> run_checks(const CheckOptions& opts = {});

}  // namespace cubline
