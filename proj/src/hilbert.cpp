#include "arcpart/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arcpart/predicates.hpp"

namespace arcpart {

namespace {

void require_order(const MonomialIdeal& ideal, int order) {
  if (order < 0)
    throw ParameterError("series order must be nonnegative");
  if (order > ideal.weight_bound())
    throw ParameterError("order " + std::to_string(order) + " exceeds the ideal's weight bound " +
                         std::to_string(ideal.weight_bound()));
}

// generator as (variable, exponent) pairs
using SparseMonomial = std::vector<std::pair<int, int>>;

SparseMonomial sparse(const Monomial& m) {
  SparseMonomial s;
  const auto& e = m.exponents();
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > 0)
      s.emplace_back(static_cast<int>(k + 1), e[k]);
  return s;
}

}  // namespace

TruncatedSeries standard_monomial_series(const MonomialIdeal& ideal, int order) {
  require_order(ideal, order);
  TruncatedSeries out(order);
  if (std::any_of(ideal.generators().begin(), ideal.generators().end(),
                  [](const Monomial& g) { return g.is_one(); }))
    return out;
  const int low = ideal.min_variable();
  // by_min[v]: generators whose smallest variable is x_v
  std::vector<std::vector<SparseMonomial>> by_min(static_cast<std::size_t>(order) + 2);
  for (const Monomial& g : ideal.generators())
    if (g.weight() <= order)
      by_min[static_cast<std::size_t>(g.min_variable())].push_back(sparse(g));

  std::vector<int> exps(static_cast<std::size_t>(order) + 2, 0);
  std::vector<unsigned long> tally(static_cast<std::size_t>(order) + 1, 0);

  // Parts are appended in non-increasing order, so when part a is appended
  // only generators with smallest variable a can become divisors.
  auto hit = [&](int a) {
    for (const SparseMonomial& g : by_min[static_cast<std::size_t>(a)]) {
      bool divides = true;
      for (auto [v, e] : g)
        if (exps[static_cast<std::size_t>(v)] < e) {
          divides = false;
          break;
        }
      if (divides)
        return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int max_part, int weight) -> void {
    ++tally[static_cast<std::size_t>(weight)];
    for (int a = std::min(max_part, order - weight); a >= low; --a) {
      ++exps[static_cast<std::size_t>(a)];
      if (!hit(a))
        self(self, a, weight + a);
      --exps[static_cast<std::size_t>(a)];
    }
  };
  rec(rec, order, 0);
  std::vector<Integer> coeffs;
  coeffs.reserve(tally.size());
  for (unsigned long t : tally)
    coeffs.emplace_back(t);
  return {order, std::move(coeffs)};
}

namespace {

class ExactSequenceSolver {
public:
  TruncatedSeries solve(const std::set<int>& ring, std::vector<Monomial> gens, int order) {
    std::erase_if(gens, [order](const Monomial& g) { return g.weight() > order; });
    if (std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); }))
      return TruncatedSeries(order);
    gens = minimalize(std::move(gens));
    std::set<int> used;
    for (const Monomial& g : gens)
      for (int v = g.min_variable(); v <= g.max_variable(); ++v)
        if (g.exponent(v) > 0)
          used.insert(v);
    TruncatedSeries s = core(gens, used, order);
    for (int u : ring)
      if (!used.count(u) && u <= order)
        s.divide_by_one_minus_q_power(u);
    return s;
  }

private:
  // HP of k[used]/(gens) with gens minimal, nonempty unless used is empty
  TruncatedSeries core(const std::vector<Monomial>& gens, const std::set<int>& used, int order) {
    if (gens.empty())
      return TruncatedSeries::one(order);
    auto key = std::make_pair(gens, order);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    const int v = *used.begin();
    const Monomial xv = Monomial::variable(v);
    TruncatedSeries out(order);
    if (v <= order) {
      std::vector<Monomial> quot;
      for (const Monomial& g : gens)
        quot.push_back(g.colon(xv));
      out.add_shifted(solve(used, std::move(quot), order - v), v);
    }
    std::set<int> rest = used;
    rest.erase(v);
    std::vector<Monomial> without;
    for (const Monomial& g : gens)
      if (g.exponent(v) == 0)
        without.push_back(g);
    out += solve(rest, std::move(without), order);
    memo_.emplace(std::move(key), out);
    return out;
  }

  std::map<std::pair<std::vector<Monomial>, int>, TruncatedSeries> memo_;
};

}  // namespace

TruncatedSeries hp_via_exact_sequence(const MonomialIdeal& ideal, int order) {
  require_order(ideal, order);
  std::set<int> ring;
  for (int u = ideal.min_variable(); u <= order; ++u)
    ring.insert(u);
  ExactSequenceSolver solver;
  return solver.solve(ring, ideal.generators(), order);
}

TruncatedSeries h_series(int r, int l_or_c, int k_or_m, int order, HConvention convention) {
  const MonomialIdeal ideal = convention == HConvention::j_ideal
                                  ? j_ideal(r, l_or_c, k_or_m, order)
                                  : block_ideal(r, l_or_c, k_or_m, order);
  return standard_monomial_series(ideal, order);
}

std::string to_string(HConvention c) {
  return c == HConvention::j_ideal ? "j_ideal" : "block";
}

}  // namespace arcpart
