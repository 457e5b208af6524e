#pragma once

#include <string>
#include <vector>

#include "arcpart/series.hpp"

namespace arcpart {

/// Outcome of one exact comparison.
struct Check {
  std::string name;      // what was compared
  std::string location;  // where it failed, e.g. "q^7" or "m=3,n=9"; empty when it holds
  bool holds = true;
  std::string expected;
  std::string got;
};

/// Compares two series coefficientwise up to `order` (both must reach it).
Check compare_series(std::string name, const TruncatedSeries& expected, const TruncatedSeries& got,
                     int order);

bool all_hold(const std::vector<Check>& checks);

}  // namespace arcpart
