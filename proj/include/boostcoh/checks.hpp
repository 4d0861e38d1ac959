#pragma once

#include <string>
#include <vector>

namespace boostcoh {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A quick self-test over the core identities: zero-boost coherence,
/// little-group unitarity, trace and positivity of constructed states and
/// agreement of the two evaluation routes at small width. Runs in well
/// under a second.
std::vector<CheckOutcome> run_fast_checks();

}  // namespace boostcoh
