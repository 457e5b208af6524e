#pragma once

#include <string>

#include "arcpart/ideal.hpp"
#include "arcpart/series.hpp"

namespace arcpart {

/// Hilbert-Poincare series of k[x_s, x_{s+1}, ...] / I to order N, counting
/// the monomials of each weight divisible by no generator. A depth-first
/// walk over partitions (largest part first) that drops every subtree whose
/// root is already in the ideal. Requires N <= ideal.weight_bound().
TruncatedSeries standard_monomial_series(const MonomialIdeal& ideal, int order);

/// The same series by the exact sequence
///   HP(S/E) = q^v HP(S/(E : x_v)) + HP(S/(E, x_v)),
/// splitting on the lowest variable x_v occurring in a generator, with
/// variables absent from all generators factored out as 1/(1-q^u) and
/// subproblems memoized on their minimal generator sets.
TruncatedSeries hp_via_exact_sequence(const MonomialIdeal& ideal, int order);

enum class HConvention {
  j_ideal,  // H_l^k = HP(S_k / J_k^l); arguments (r, l, k)
  block,    // H_{r,c}^m = HP of the block ideal; arguments (r, c, m)
};

TruncatedSeries h_series(int r, int l_or_c, int k_or_m, int order, HConvention convention);

std::string to_string(HConvention c);

}  // namespace arcpart
