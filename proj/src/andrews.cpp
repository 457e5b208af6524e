#include "arcpart/andrews.hpp"

#include <algorithm>
#include <map>

#include "arcpart/counting.hpp"

namespace arcpart {

bool SystemReport::all_hold() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const EquationResult& e) { return e.holds; });
}

namespace {

// Memoized c_i(m, n) with the boundary convention for negative arguments.
class CountTable {
public:
  CountTable(AndrewsSystem system, SystemSide side, int k) : system_(system), side_(side), k_(k) {}

  const Integer& operator()(int i, int m, int n) {
    static const Integer zero = 0;
    if (m < 0 || n < 0)
      return zero;
    auto key = std::make_tuple(i, m, n);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
    return memo_.emplace(key, count(family(i, m), n)).first->second;
  }

private:
  CountFamily family(int i, int m) const {
    if (system_ == AndrewsSystem::rr_k)
      return side_ == SystemSide::c ? CountFamily::shifted_c(k_, i, m)
                                    : CountFamily::shifted_b(k_, i, m);
    return side_ == SystemSide::c ? CountFamily::new_part(3, i, m)
                                  : CountFamily::gordon_b(3, i, m);
  }

  AndrewsSystem system_;
  SystemSide side_;
  int k_;
  std::map<std::tuple<int, int, int>, Integer> memo_;
};

void check(EquationResult& eq, int m, int n, const Integer& lhs, const Integer& rhs) {
  ++eq.checked;
  if (lhs != rhs && eq.holds) {
    eq.holds = false;
    eq.first_failure = Counterexample{m, n, lhs, rhs};
  }
}

}  // namespace

SystemReport andrews_system_check(AndrewsSystem system, SystemSide side, int k, int max_m,
                                  int max_n) {
  if (max_m < 0 || max_n < 0)
    throw std::invalid_argument("system bounds must be nonnegative");
  if (system == AndrewsSystem::rr_k && k < 1)
    throw std::invalid_argument("rr_k system needs k >= 1");
  CountTable c(system, side, k);
  SystemReport report{system, side, k, max_m, max_n, {}};
  const int families = system == AndrewsSystem::rr_k ? 2 : 3;

  EquationResult base{"c_i(m,n) = [m=n=0] for m<=0 or n<=0", true, 0, {}};
  for (int i = 1; i <= families; ++i)
    for (int m = 0; m <= max_m; ++m)
      for (int n = 0; n <= max_n; ++n)
        if (m == 0 || n == 0)
          check(base, m, n, c(i, m, n), Integer(m == 0 && n == 0 ? 1 : 0));
  report.equations.push_back(base);

  auto run = [&](std::string name, auto lhs, auto rhs) {
    EquationResult eq{std::move(name), true, 0, {}};
    for (int m = 0; m <= max_m; ++m)
      for (int n = 0; n <= max_n; ++n)
        check(eq, m, n, lhs(m, n), rhs(m, n));
    report.equations.push_back(std::move(eq));
  };

  if (system == AndrewsSystem::rr_k) {
    run("c_2(m,n) - c_1(m,n) = c_1(m-1, n-m-k+1)",
        [&](int m, int n) { return Integer(c(2, m, n) - c(1, m, n)); },
        [&](int m, int n) { return c(1, m - 1, n - m - k + 1); });
    run("c_1(m,n) = c_2(m, n-m)", [&](int m, int n) { return c(1, m, n); },
        [&](int m, int n) { return c(2, m, n - m); });
  } else {
    run("c_3(m,n) - c_2(m,n) = c_1(m-2, n-m)",
        [&](int m, int n) { return Integer(c(3, m, n) - c(2, m, n)); },
        [&](int m, int n) { return c(1, m - 2, n - m); });
    run("c_2(m,n) - c_1(m,n) = c_2(m-1, n-m)",
        [&](int m, int n) { return Integer(c(2, m, n) - c(1, m, n)); },
        [&](int m, int n) { return c(2, m - 1, n - m); });
    run("c_1(m,n) = c_3(m, n-m)", [&](int m, int n) { return c(1, m, n); },
        [&](int m, int n) { return c(3, m, n - m); });
  }
  return report;
}

std::string to_string(AndrewsSystem s) { return s == AndrewsSystem::rr_k ? "rr_k" : "gordon3"; }
std::string to_string(SystemSide s) { return s == SystemSide::c ? "c" : "b"; }

}  // namespace arcpart
