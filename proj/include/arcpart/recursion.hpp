#pragma once

#include <vector>

#include "arcpart/check.hpp"
#include "arcpart/series.hpp"

namespace arcpart {

/// Polynomial coefficients of the two expansions
///
///   H_i^1 = sum_j B_{i,j,(r-1)(d-1)+j} H^d_{r-j+1}        (d >= 3)
///   G_l   = sum_j A_{l,j,(r-1)d+j} G_{(r-1)d+j}            (d >= 2)
///
/// Entries are stored by level L, where the third index is (r-1)L + j; so the
/// B entry at d sits at level d-1 and the A entry at d sits at level d. Both
/// tables start at level 2 and obey the same step
///   T(j, L) = q^{(j-1)L} * sum_{k=1}^{r-j+1} T(k, L-1).
class CoefficientTable {
public:
  enum class Kind { A_lz, B_hp };

  Kind kind() const noexcept { return kind_; }
  int r() const noexcept { return r_; }
  /// i for B tables, l for A tables.
  int param() const noexcept { return param_; }
  int order() const noexcept { return order_; }
  int max_level() const noexcept { return static_cast<int>(levels_.size()) + 1; }

  const TruncatedSeries& at_level(int j, int level) const;
  /// B_{i,j,(r-1)(d-1)+j}; B tables only.
  const TruncatedSeries& b(int j, int d) const;
  /// A_{l,j,(r-1)d+j}; A tables only.
  const TruncatedSeries& a(int j, int d) const;
  int third_index(int j, int level) const { return (r_ - 1) * level + j; }

  /// Level-2 entry from the initial conditions.
  static TruncatedSeries initial_entry(Kind kind, int r, int param, int j, int order);
  /// One recursion step from the previous level of this table.
  TruncatedSeries step(int j, int level) const;

  friend CoefficientTable hp_coefficient_table(int r, int i, int d_max, int order);
  friend CoefficientTable lz_coefficient_table(int r, int l, int d_max, int order);

private:
  CoefficientTable(Kind kind, int r, int param, int max_level, int order);
  Kind kind_;
  int r_;
  int param_;
  int order_;
  std::vector<std::vector<TruncatedSeries>> levels_;  // levels_[L-2][j-1]
};

/// B table for d = 3..d_max.
CoefficientTable hp_coefficient_table(int r, int i, int d_max, int order);
/// A table for d = 2..d_max.
CoefficientTable lz_coefficient_table(int r, int l, int d_max, int order);

/// Recomputes every entry above level 2 from its predecessor and compares.
std::vector<Check> table_recursion_check(const CoefficientTable& table);
/// A_{l,m,(r-1)d+m} = B_{i,m,(r-1)d+m}, l = r-i+1, for 2 <= d <= d_max.
std::vector<Check> coefficient_equality_check(int r, int i, int d_max, int order);
/// valuation of every entry at level L is at least (j-1)L.
std::vector<Check> table_valuation_check(const CoefficientTable& table);

/// The series G_1..G_{t_max}, all at order N.
///
/// G_1..G_r are the products with n not congruent to 0, +-(r+1-l) mod 2r+1;
/// larger indices come from
///   G_{(r-1)j+i} = (G_{(r-1)j-i+2} - G_{(r-1)j-i+3}) / q^{(i-1)j},  2 <= i <= r.
/// Each division loses (i-1)j known coefficients, so the products are formed
/// at a higher order chosen so that every output still reaches N. A division
/// with a nonzero remainder throws std::domain_error.
class LzSeries {
public:
  LzSeries(int r, int t_max, int order);
  int r() const noexcept { return r_; }
  int order() const noexcept { return order_; }
  int t_max() const noexcept { return static_cast<int>(g_.size()) - 1; }
  /// Order at which the products G_1..G_r were formed.
  int working_order() const noexcept { return working_order_; }
  const TruncatedSeries& operator()(int t) const;

  /// (j, i) with t = (r-1)j + i, 2 <= i <= r, for t > r.
  static std::pair<int, int> split_index(int r, int t);

private:
  int r_;
  int order_;
  int working_order_;
  std::vector<TruncatedSeries> g_;  // g_[t], g_[0] unused
};

LzSeries lz_g_series(int r, int t_max, int order);

/// G_{(r-1)d+i} - 1 divisible by q^{d+1} (1 <= i <= r-1) or q^{d+2} (i = r), 1 <= d <= d_max.
/// Requires order >= d_max + 2 so the statement is not vacuous.
std::vector<Check> empirical_hypothesis_check(int r, int d_max, int order);
/// G_{(r-1)j-i+2} = q^{(i-1)j} G_{(r-1)j+i} + G_{(r-1)j-i+3} for every stored t = (r-1)j+i.
std::vector<Check> lz_resubstitution_check(const LzSeries& g);

/// HP(S_k / J_k) with J_k = (x_t^{r-n} x_{t+1}^n : t >= k).
TruncatedSeries h_full(int r, int k, int order);
/// H_l^k = sum_{j=1}^l q^{(l-j)k} H^{k+1}_{r-l+j}, plus H_r^k = H^k and H_1^k = H^{k+1}.
std::vector<Check> h_lemma_check(int r, int k, int order);

/// The full chain for one (r, i): H_i^1 = HP(S/I_{r,i}) = product side = G_l,
/// both expansions at every d, and the d_max coefficient alone matching to
/// order min(N, d_max - 1).
std::vector<Check> convergence_check(int r, int i, int d_max, int order);

}  // namespace arcpart
