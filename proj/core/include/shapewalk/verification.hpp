#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shapewalk {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Each check runs for K = 1 .. min(k_max, its own bound).
  int k_max = 8;
  std::uint64_t seed = 20240101;
};

/// Runs the invariant suite of the graph, field and simulation layers.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace shapewalk
