#pragma once

#include <optional>
#include <string>

#include "arcpart/integer.hpp"
#include "arcpart/partition.hpp"
#include "arcpart/predicates.hpp"

namespace arcpart {

enum class FamilyTag {
  A,    // parts not congruent to 0, +-i mod 2r+1
  B,    // Gordon difference conditions
  C,    // new-part condition
  c2k,  // smallest part > m + k - i
  b2k,  // smallest part >= k, at most i-1 parts equal to k, gaps >= 2
  c3,   // C with r = 3
  b3,   // B with r = 3
};

/// A counted set of partitions: tag plus its parameters, optionally restricted
/// to a fixed length m.
struct CountFamily {
  FamilyTag tag = FamilyTag::B;
  int r = 2;
  int i = 1;
  int k = 1;
  std::optional<int> length;
  CForm form = CForm::remark;

  /// Throws ParameterError when the parameters are out of range.
  void validate() const;
  std::string describe() const;

  static CountFamily gordon_a(int r, int i, std::optional<int> m = {});
  static CountFamily gordon_b(int r, int i, std::optional<int> m = {});
  static CountFamily new_part(int r, int i, std::optional<int> m = {}, CForm form = CForm::remark);
  static CountFamily shifted_c(int k, int i, std::optional<int> m = {});
  static CountFamily shifted_b(int k, int i, std::optional<int> m = {});
};

/// Membership test for a family, evaluated on a complete partition (the
/// length restriction of the family is also enforced).
bool family_contains(const CountFamily& family, const Partition& p);

/// The pruning constraint used by the fast enumeration path.
Constraint family_constraint(const CountFamily& family);

/// Exact number of partitions of n in the family (0 for n < 0 or, with a fixed
/// length, for negative lengths).
Integer count(const CountFamily& family, int n);

/// Same count computed by filtering every partition of n with
/// family_contains; the reference for the pruned path.
Integer count_by_filter(const CountFamily& family, int n);

std::string to_string(FamilyTag tag);
FamilyTag parse_family(const std::string& s);

}  // namespace arcpart
