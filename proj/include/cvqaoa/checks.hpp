#pragma once

#include <string>
#include <vector>

namespace cvqaoa {

struct CheckLine {
  std::string label;
  double value = 0.0;  ///< measured residual (or achieved quantity)
  double limit = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool passed() const;
};

/// heisenberg, parseval, grover-model, pubo-oracle, gradient-fd, iqp
const std::vector<std::string>& check_suites();
/// Runs a named invariant suite at fixed seeds and grids. Throws InvalidArgument for unknown names.
CheckReport run_check(const std::string& suite);

} // namespace cvqaoa
