#include "arcpart/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcpart {

Check compare_series(std::string name, const TruncatedSeries& expected, const TruncatedSeries& got,
                     int order) {
  if (expected.order() < order || got.order() < order)
    throw std::invalid_argument("compare_series: operand known only to order " +
                                std::to_string(std::min(expected.order(), got.order())) +
                                ", comparison needs " + std::to_string(order));
  Check c;
  c.name = std::move(name);
  const int k = first_difference(expected.restrict(order), got.restrict(order));
  if (k >= 0) {
    c.holds = false;
    c.location = "q^" + std::to_string(k);
    c.expected = to_string(expected[k]);
    c.got = to_string(got[k]);
  }
  return c;
}

bool all_hold(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

}  // namespace arcpart
