#pragma once

#include <string>
#include <vector>

#include "arcpart/series.hpp"

namespace arcpart {

/// (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1.
TruncatedSeries pochhammer(int n, int order);

/// Cache of 1/(q)_n for 0 <= n <= max_n at a fixed order.
class InversePochhammerTable {
public:
  InversePochhammerTable(int max_n, int order);
  const TruncatedSeries& operator()(int n) const;
  int order() const noexcept { return order_; }

private:
  int order_;
  std::vector<TruncatedSeries> inv_;
};

/// prod_{n>=1} 1/(1-q^n): the generating series of p(n).
TruncatedSeries partition_series(int order);

/// prod over n >= 1, n not congruent to 0, +-i mod 2r+1, of 1/(1-q^n).
TruncatedSeries product_side(int r, int i, int order);

/// sum over n_1..n_{r-1} >= 0 of
///   q^{N_1^2+...+N_{r-1}^2 + N_i+...+N_{r-1}} / ((q)_{n_1}...(q)_{n_{r-1}}),
/// with N_j = n_j + ... + n_{r-1}.
TruncatedSeries andrews_gordon_sum(int r, int i, int order);

/// Gaussian binomial (q)_n / ((q)_j (q)_{n-j}) computed through unit inversion.
TruncatedSeries q_binomial(int n, int j, int order);
/// sum over j <= l_j <= ... <= l_1 <= n of q^{l_1+...+l_j - j^2}, by direct chain enumeration.
TruncatedSeries lemma_qbin_sum(int n, int j, int order);

/// sum_{n1,n2 >= 0} q^{(n1+n2)^2 + n2^2} / ((q)_{n1} (q)_{n2})
TruncatedSeries double_sum_r3(int order);
/// sum over n >= 0 and 0 <= j <= l_j <= ... <= l_1 <= n of q^{n^2 + l_1+...+l_j} / (q)_n
TruncatedSeries chain_sum_r3(int order);

/// The chain form of the Hilbert series of the candidate ideal for i = r:
///   1 + sum_{n>=1} q^{n^2}/(q)_n
///     + sum over 1 <= l_j <= ... <= l_1 <= n with 1 <= j <= p_{r,1}(mu)+...+p_{r,r-2}(mu)
///       of q^{n^2+|mu|}/(q)_n,        mu = (l_1, ..., l_j).
/// Requires r >= 3.
TruncatedSeries conjecture_sum(int r, int order);

enum class ClosedForm {
  r2,       // two blocks: sum_{n<m} q^{nm}/(q)_n + sum_{j<c} chains in [m, k] over (q)_k
  r3,       // three blocks: chain length bounded by l_{j-c+1} + c - 1
  general,  // chain length bounded by sum_{i<=r-2} p_{r,i}(l_1..l_{j-c+1}) + c - 1
};

/// Closed-form evaluation of the Hilbert series of the block ideal with r
/// blocks, c integers in the first block and variables starting at x_m.
/// r2 and r3 ignore `r` beyond checking it matches; general needs r >= 2.
TruncatedSeries h_closed_form(ClosedForm form, int r, int c, int m, int order);

std::string to_string(ClosedForm f);
ClosedForm parse_closed_form(const std::string& s);

}  // namespace arcpart
