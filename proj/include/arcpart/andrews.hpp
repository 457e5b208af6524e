#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcpart/integer.hpp"

namespace arcpart {

/// The two Andrews-type systems of functional equations in (m, n):
///
///   rr_k:    c_2(m,n) - c_1(m,n) = c_1(m-1, n-m-k+1),   c_1(m,n) = c_2(m, n-m)
///   gordon3: c_3(m,n) - c_2(m,n) = c_1(m-2, n-m),
///            c_2(m,n) - c_1(m,n) = c_2(m-1, n-m),       c_1(m,n) = c_3(m, n-m)
///
/// plus the boundary equation c_i(m,n) = [m = n = 0] whenever m <= 0 or n <= 0.
enum class AndrewsSystem { rr_k, gordon3 };

/// Which count function is plugged into the system: the new-part/shifted
/// family (c) or the Gordon/difference family (b).
enum class SystemSide { c, b };

struct Counterexample {
  int m = 0;
  int n = 0;
  Integer lhs;
  Integer rhs;
};

struct EquationResult {
  std::string equation;
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Counterexample> first_failure;
};

struct SystemReport {
  AndrewsSystem system = AndrewsSystem::rr_k;
  SystemSide side = SystemSide::c;
  int k = 1;
  int max_m = 0;
  int max_n = 0;
  std::vector<EquationResult> equations;

  bool all_hold() const;
};

/// Evaluates every equation of the system at all 0 <= m <= max_m,
/// 0 <= n <= max_n from enumerated counts. Failures are reported, never thrown.
/// `k` is only used by rr_k.
SystemReport andrews_system_check(AndrewsSystem system, SystemSide side, int k, int max_m,
                                  int max_n);

std::string to_string(AndrewsSystem s);
std::string to_string(SystemSide s);

}  // namespace arcpart
