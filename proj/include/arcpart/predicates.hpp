#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arcpart/partition.hpp"

namespace arcpart {

/// Raised when (r, i, k, ...) fall outside the documented ranges.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Checks r >= 2 and 1 <= i <= r.
void require_gordon_params(int r, int i);

/// lambda_j - lambda_{j+r-1} >= 2 for every admissible j, and at most i-1 parts equal to 1.
bool gordon_b_predicate(const Partition& p, int r, int i);

/// No part congruent to 0 or +-i modulo 2r+1.
bool congruence_a_predicate(const Partition& p, int r, int i);

/// The new parts p_{i,1..r}(Lambda) and the count N_i of nonzero entries among
/// the first r-1 of them.
struct NewPartProfile {
  int r = 2;
  int i = 1;
  std::vector<int> values;  // values[l-1] = p_{i,l}, size r
  int count_nonzero = 0;

  int at(int l) const { return values.at(static_cast<std::size_t>(l - 1)); }
  /// p_{i,1} + ... + p_{i,l}
  int prefix_sum(int l) const;
  bool has_zero() const;
};

/// Evaluates the recursive index formulas for p_{i,l}, l = 1..r. The entry
/// l = r uses the same formula as the range i < l <= r-1 (or the range
/// 2 <= l <= i when i = r). Once an entry is zero all later entries are zero.
NewPartProfile new_parts(const Partition& p, int r, int i);

enum class CForm {
  conjecture,  // at most i-1 ones, and N_i < r-1 or (N_i = r-1 and m <= sum_{l<r} p_{i,l} - (r-i))
  remark,      // some p_{i,l} vanishes, 1 <= l <= r
};

bool c_predicate(const Partition& p, int r, int i, CForm form = CForm::remark);

/// Smallest part > m + k - i, where m is the length of the partition.
bool shifted_c_predicate(const Partition& p, std::size_t m, int k, int i);
/// Smallest part >= k, at most i-1 parts equal to k, consecutive parts differ by at least 2.
bool shifted_b_predicate(const Partition& p, std::size_t m, int k, int i);

std::string to_string(CForm form);
CForm parse_cform(const std::string& s);

}  // namespace arcpart
