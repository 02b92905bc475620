#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ogp {

struct SelftestSuite {
  std::string name;
  bool passed = false;
  double worst_error = 0.0;
  double tolerance = 0.0;
};

struct SelftestReport {
  std::vector<SelftestSuite> suites;

  int failures() const {
    int n = 0;
    for (const auto& s : suites)
      if (!s.passed) ++n;
    return n;
  }
};

// Runs every invariant suite with the given seed. A positive tol_override
// replaces each suite's own tolerance (useful to force failures).
SelftestReport run_selftest(std::uint64_t seed, double tol_override = 0.0);

}  // namespace ogp
