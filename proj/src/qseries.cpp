#include "arcpart/qseries.hpp"

#include <functional>
#include <stdexcept>

#include "arcpart/partition.hpp"
#include "arcpart/predicates.hpp"

namespace arcpart {

TruncatedSeries pochhammer(int n, int order) {
  if (n < 0)
    throw std::invalid_argument("(q)_n needs n >= 0");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int k = 1; k <= n && k <= order; ++k)
    s.multiply_by_one_minus_q_power(k);
  return s;
}

InversePochhammerTable::InversePochhammerTable(int max_n, int order) : order_(order) {
  TruncatedSeries cur = TruncatedSeries::one(order);
  inv_.push_back(cur);
  for (int n = 1; n <= max_n; ++n) {
    if (n <= order)
      cur.divide_by_one_minus_q_power(n);
    inv_.push_back(cur);
  }
}

const TruncatedSeries& InversePochhammerTable::operator()(int n) const {
  return inv_.at(static_cast<std::size_t>(n));
}

TruncatedSeries partition_series(int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int n = 1; n <= order; ++n)
    s.divide_by_one_minus_q_power(n);
  return s;
}

TruncatedSeries product_side(int r, int i, int order) {
  require_gordon_params(r, i);
  const int modulus = 2 * r + 1;
  TruncatedSeries s = TruncatedSeries::one(order);
  // factors with n > order are congruent to 1
  for (int n = 1; n <= order; ++n) {
    const int res = n % modulus;
    if (res != 0 && res != i && res != modulus - i)
      s.divide_by_one_minus_q_power(n);
  }
  return s;
}

namespace {

int isqrt_floor(int x) {
  int s = 0;
  while ((s + 1) * (s + 1) <= x)
    ++s;
  return s;
}

// out += q^e * prod_k inv(n_k), each product formed at order - e.
void add_pochhammer_term(TruncatedSeries& out, int e, const std::vector<int>& ns,
                         const InversePochhammerTable& inv) {
  const int order = out.order();
  if (e > order)
    return;
  TruncatedSeries term = inv(0).restrict(order - e);
  for (int n : ns)
    if (n > 0)
      term = term * inv(n).restrict(order - e);
  out.add_shifted(term, e);
}

}  // namespace

TruncatedSeries andrews_gordon_sum(int r, int i, int order) {
  require_gordon_params(r, i);
  const InversePochhammerTable inv(order, order);
  TruncatedSeries out(order);
  std::vector<int> big(static_cast<std::size_t>(r - 1), 0);  // N_1 >= N_2 >= ... >= N_{r-1}
  // N_j chosen from j = 1 upward; the exponent only grows, so it bounds the search
  std::function<void(int, int, int)> rec = [&](int j, int cap, int exponent) {
    if (j == r) {
      std::vector<int> ns(big.size());
      for (std::size_t t = 0; t < big.size(); ++t)
        ns[t] = big[t] - (t + 1 < big.size() ? big[t + 1] : 0);
      add_pochhammer_term(out, exponent, ns, inv);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      const int e = exponent + v * v + (j >= i ? v : 0);
      if (e > order)
        break;
      big[static_cast<std::size_t>(j - 1)] = v;
      rec(j + 1, v, e);
    }
  };
  rec(1, isqrt_floor(order), 0);
  return out;
}

TruncatedSeries q_binomial(int n, int j, int order) {
  if (j < 0 || n < 0 || j > n)
    throw std::invalid_argument("q_binomial needs 0 <= j <= n");
  return pochhammer(n, order) * (pochhammer(j, order) * pochhammer(n - j, order)).invert_unit();
}

namespace {

// Visits the non-increasing chains l_1 >= ... >= l_len with lo <= l_t <= hi
// and l_1 + ... + l_len <= budget, passing the chain as a partition.
void for_each_chain(int lo, int hi, int budget, const std::function<void(const Partition&)>& visit,
                    std::optional<int> exact_len = {}) {
  if (lo < 1)
    throw std::invalid_argument("chain parts must be positive");
  EnumerationOptions opts;
  opts.min_part = lo;
  if (exact_len)
    opts.exact_length = static_cast<std::size_t>(*exact_len);
  Constraint cap;
  cap.extend_ok = [hi](std::span<const int> prefix) { return prefix.front() <= hi; };
  for (int w = 0; w <= budget; ++w)
    for_each_partition(w, opts, cap, visit);
}

}  // namespace

TruncatedSeries lemma_qbin_sum(int n, int j, int order) {
  if (j < 0 || n < 0 || j > n)
    throw std::invalid_argument("lemma_qbin_sum needs 0 <= j <= n");
  TruncatedSeries out(order);
  if (j == 0)
    return TruncatedSeries::one(order);
  const int base = j * j;
  for_each_chain(j, n, order + base, [&](const Partition& chain) {
    const int e = chain.weight() - base;
    if (e <= order)
      out.add_shifted(TruncatedSeries::one(order), e);
  }, j);
  return out;
}

TruncatedSeries double_sum_r3(int order) {
  const InversePochhammerTable inv(order, order);
  TruncatedSeries out(order);
  for (int n2 = 0; 2 * n2 * n2 <= order; ++n2)
    for (int n1 = 0; (n1 + n2) * (n1 + n2) + n2 * n2 <= order; ++n1)
      add_pochhammer_term(out, (n1 + n2) * (n1 + n2) + n2 * n2, {n1, n2}, inv);
  return out;
}

namespace {

// sum over n of q^{n^2} * P_n(q) / (q)_n, where P_n collects q^{|chain|} over
// the admissible chains with parts in [lo, n] (plus `base_n(n)` for the empty chain).
TruncatedSeries chain_sum(int order, int n_min, int lo,
                          const std::function<Integer(int n)>& empty_chain,
                          const std::function<bool(const Partition&, int n)>& admissible) {
  const InversePochhammerTable inv(order, order);
  TruncatedSeries out(order);
  for (int n = n_min; n * n <= order; ++n) {
    const int room = order - n * n;
    TruncatedSeries poly(room);
    poly.add_shifted(TruncatedSeries::one(room), 0, empty_chain(n));
    if (n >= lo)
      for_each_chain(lo, n, room, [&](const Partition& chain) {
        if (!chain.empty() && admissible(chain, n))
          poly.add_shifted(TruncatedSeries::one(room), chain.weight());
      });
    out.add_shifted(poly * inv(n).restrict(room), n * n);
  }
  return out;
}

}  // namespace

TruncatedSeries chain_sum_r3(int order) {
  return chain_sum(
      order, 0, 1, [](int) { return Integer(1); },
      [](const Partition& chain, int) {
        return static_cast<int>(chain.length()) <= chain.smallest();
      });
}

namespace {

int new_part_budget(const Partition& mu, int r) {
  if (r < 3)
    return 0;
  return new_parts(mu, r, r).prefix_sum(r - 2);
}

}  // namespace

TruncatedSeries conjecture_sum(int r, int order) {
  if (r < 3)
    throw ParameterError("conjecture_sum needs r >= 3");
  return chain_sum(
      order, 0, 1, [](int) { return Integer(1); },
      [r](const Partition& chain, int) {
        return static_cast<int>(chain.length()) <= new_part_budget(chain, r);
      });
}

namespace {

Partition leading_parts(const Partition& chain, int count) {
  if (count <= 0)
    return {};
  auto parts = chain.parts();
  return Partition(std::vector<int>(parts.begin(), parts.begin() + count));
}

}  // namespace

TruncatedSeries h_closed_form(ClosedForm form, int r, int c, int m, int order) {
  if (c < 1 || m < 1)
    throw ParameterError("h_closed_form needs c >= 1 and m >= 1");
  if (r < 2 || (form == ClosedForm::r2 && r != 2) || (form == ClosedForm::r3 && r != 3))
    throw ParameterError("h_closed_form: r does not match the requested form");
  const InversePochhammerTable inv(order, order);
  TruncatedSeries head(order);
  for (int n = 0; n < m; ++n)
    add_pochhammer_term(head, n * m, {n}, inv);

  if (form == ClosedForm::r2) {
    // the j = 0 term is the empty chain, taken over k >= m
    TruncatedSeries tail = chain_sum(
        order, m, m, [](int) { return Integer(1); },
        [c](const Partition& chain, int) { return static_cast<int>(chain.length()) <= c - 1; });
    return head + tail;
  }

  auto bound = [form, r, c](const Partition& chain) {
    const int j = static_cast<int>(chain.length());
    const Partition mu = leading_parts(chain, j - c + 1);
    if (form == ClosedForm::r3)
      return mu.smallest() + c - 1;  // l_{j-c+1}, zero when the index is not positive
    return new_part_budget(mu, r) + c - 1;
  };
  TruncatedSeries tail = chain_sum(
      order, m, m, [](int) { return Integer(1); },
      [&](const Partition& chain, int) { return static_cast<int>(chain.length()) <= bound(chain); });
  return head + tail;
}

std::string to_string(ClosedForm f) {
  switch (f) {
  case ClosedForm::r2: return "r2";
  case ClosedForm::r3: return "r3";
  case ClosedForm::general: return "general";
  }
  return "?";
}

ClosedForm parse_closed_form(const std::string& s) {
  if (s == "r2") return ClosedForm::r2;
  if (s == "r3") return ClosedForm::r3;
  if (s == "general") return ClosedForm::general;
  throw ParameterError("unknown closed form '" + s + "'");
}

}  // namespace arcpart
