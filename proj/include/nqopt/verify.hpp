#pragma once

#include <string>
#include <vector>

namespace nqopt {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled in on failure, or a short note on success
};

// Self-checks runnable from the installed tool, no test framework needed:
// the cost function against a brute-force oracle on every placement up to
// n = 6, the solution count on the 8-queens permutation space, structure and
// balance of the embedded designs, and ranking fixtures for the selection
// stage. Returns one entry per check.
std::vector<CheckResult> run_verification_suite();

}  // namespace nqopt
