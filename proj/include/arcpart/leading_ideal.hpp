#pragma once

#include <vector>

#include "arcpart/diffpoly.hpp"
#include "arcpart/integer.hpp"
#include "arcpart/monomial.hpp"

namespace arcpart {

/// m * D^j(x_1^r) with wt(m) = n - r - j.
struct SpanningElement {
  int j = 0;
  Monomial multiplier;
  DiffPolynomial value;
};

/// All products m * D^j(x_1^r) of weight n, 0 <= j <= n - r, multipliers in
/// the order they are enumerated. They span the weight-n part of [x_1^r].
/// Empty when n < r.
std::vector<SpanningElement> graded_ideal_spanning_set(int r, int n);

/// Row-reduced weight-n piece of [x_1^r].
struct GradedEchelon {
  using Row = std::vector<std::pair<int, Integer>>;  // (column, coefficient), columns ascending

  int r = 2;
  int weight = 0;
  OrderTag order = OrderTag::wlex;
  /// Every monomial of weight n, largest first; column c is basis[c].
  std::vector<Monomial> basis;
  /// One reduced row per pivot, in pivot-column order; leading coefficient positive, content 1.
  std::vector<Row> rows;
  std::size_t spanning_size = 0;

  std::size_t rank() const noexcept { return rows.size(); }
  std::size_t standard_count() const noexcept { return basis.size() - rows.size(); }
  /// Pivot monomials, largest first.
  std::vector<Monomial> leading_monomials() const;
};

/// Fraction-free elimination of the spanning set against the weight-n basis.
/// Rows are processed by leading monomial (largest first), ties broken by
/// smaller j; each row is reduced by two-row updates a*row - b*pivot with the
/// row content divided out after every update.
GradedEchelon graded_echelon(int r, int n, OrderTag order);

std::vector<Monomial> leading_monomials_at_weight(int r, int n, OrderTag order);

struct WeightSummary {
  int weight = 0;
  std::size_t monomials = 0;
  std::size_t leading = 0;
  std::size_t standard = 0;
  std::size_t spanning = 0;
};

struct LeadingIdealResult {
  int r = 2;
  OrderTag order = OrderTag::wlex;
  int max_weight = 0;
  /// Minimal generators of the leading ideal up to max_weight, sorted by weight then order.
  std::vector<Monomial> generators;
  std::vector<WeightSummary> per_weight;  // weights 0..max_weight
};

/// Eliminates every weight n <= W (in parallel over n) and minimalizes the
/// union of the pivot sets.
LeadingIdealResult leading_ideal(int r, int max_weight, OrderTag order, unsigned workers = 1);
std::vector<Monomial> leading_ideal_minimal_generators(int r, int max_weight, OrderTag order);

/// The generators the leading ideal is compared with: I'_{r,r} for wlex and
/// I_{r,r} for wrevlex, truncated at the weight bound.
std::vector<Monomial> candidate_generators(int r, int max_weight, OrderTag order);

struct CandidateDiff {
  std::vector<Monomial> extra;    // computed only
  std::vector<Monomial> missing;  // candidate only
  std::vector<Monomial> shared;
  bool empty() const noexcept { return extra.empty() && missing.empty(); }
};

/// Set comparison of two minimal generator lists; outputs keep the order of
/// the inputs.
CandidateDiff candidate_diff(const std::vector<Monomial>& computed,
                             const std::vector<Monomial>& candidate);

/// Sorts by weight, then by the monomial order (smaller first).
void sort_by_order(std::vector<Monomial>& ms, OrderTag order);

}  // namespace arcpart
