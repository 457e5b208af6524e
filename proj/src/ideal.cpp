#include "arcpart/ideal.hpp"

#include <algorithm>

#include "arcpart/predicates.hpp"

namespace arcpart {

MonomialIdeal::MonomialIdeal(IdealFamily family, IdealParams params, int weight_bound,
                             int min_variable, std::vector<Monomial> generators,
                             Membership intrinsic)
    : family_(family), params_(params), weight_bound_(weight_bound), min_variable_(min_variable),
      intrinsic_(std::move(intrinsic)) {
  if (weight_bound < 0)
    throw ParameterError("weight bound must be nonnegative");
  if (min_variable < 1)
    throw ParameterError("ring variables start at index >= 1");
  std::erase_if(generators, [&](const Monomial& g) { return g.weight() > weight_bound; });
  for (const Monomial& g : generators)
    if (!g.is_one() && g.min_variable() < min_variable)
      throw ParameterError("generator " + g.to_string() + " uses a variable outside the ring");
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::optional<bool> MonomialIdeal::intrinsic_contains(const Monomial& m) const {
  if (!intrinsic_)
    return std::nullopt;
  return intrinsic_(m.to_partition());
}

MonomialIdeal MonomialIdeal::colon(const Monomial& f) const {
  std::vector<Monomial> gens;
  gens.reserve(generators_.size());
  for (const Monomial& g : generators_)
    gens.push_back(g.colon(f));
  return {IdealFamily::custom, params_, weight_bound_, min_variable_, std::move(gens)};
}

MonomialIdeal MonomialIdeal::sum(const std::vector<Monomial>& extra) const {
  std::vector<Monomial> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return {IdealFamily::custom, params_, weight_bound_, min_variable_, std::move(gens)};
}

std::string MonomialIdeal::describe() const {
  const std::string p = std::to_string(params_.r);
  switch (family_) {
  case IdealFamily::zero: return "(0)";
  case IdealFamily::gordon: return "I_{" + p + "," + std::to_string(params_.a) + "}";
  case IdealFamily::new_part: return "I'_{" + p + "," + std::to_string(params_.a) + "}";
  case IdealFamily::j_ideal:
    return "J_" + std::to_string(params_.b) + "^" + std::to_string(params_.a) + " (r=" + p + ")";
  case IdealFamily::block:
    return "block(r=" + p + ",c=" + std::to_string(params_.a) + ",m=" + std::to_string(params_.b) +
           ")";
  case IdealFamily::custom: return "custom";
  }
  return "?";
}

namespace {

// x_t^{r-n} x_{t+1}^n for t >= from, 0 <= n <= r-1, weight t*r + n <= W
void append_consecutive_patterns(std::vector<Monomial>& out, int r, int from, int weight_bound) {
  for (int t = from; t * r <= weight_bound; ++t)
    for (int n = 0; n <= r - 1 && t * r + n <= weight_bound; ++n)
      out.push_back(Monomial::variable(t, r - n) * Monomial::variable(t + 1, n));
}

// Chains of r blocks of non-decreasing integers >= lower. The first block has
// `first_size` entries; next_size(j, last) gives the size of block j from the
// last entry of block j-1. A block of size <= 0 ends the chain early.
std::vector<Monomial> block_monomials(int r, int first_size, int lower, int weight_bound,
                                      const std::function<int(int, int)>& next_size) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(std::max(weight_bound, 0)) + 1, 0);
  std::function<void(int, int, int, int, int)> rec = [&](int block, int pos, int size, int last,
                                                         int weight) {
    if (pos == size) {
      const int nb = block + 1;
      const int ns = nb > r ? 0 : next_size(nb, last);
      if (ns <= 0) {
        out.emplace_back(exps);
        return;
      }
      rec(nb, 0, ns, last, weight);
      return;
    }
    // the remaining entries of this block are all >= v
    for (int v = last; weight + v * (size - pos) <= weight_bound; ++v) {
      ++exps[static_cast<std::size_t>(v - 1)];
      rec(block, pos + 1, size, v, weight + v);
      --exps[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(1, 0, first_size, lower, 0);
  return out;
}

}  // namespace

MonomialIdeal zero_ideal(int weight_bound, int min_variable) {
  return {IdealFamily::zero, {}, weight_bound, min_variable, {}};
}

MonomialIdeal gordon_ideal(int r, int i, int weight_bound) {
  require_gordon_params(r, i);
  std::vector<Monomial> gens;
  if (i <= weight_bound)
    gens.push_back(Monomial::variable(1, i));
  append_consecutive_patterns(gens, r, 1, weight_bound);
  return {IdealFamily::gordon, {r, i, 1}, weight_bound, 1, std::move(gens),
          [r, i](const Partition& p) { return !gordon_b_predicate(p, r, i); }};
}

MonomialIdeal new_part_ideal(int r, int i, int weight_bound) {
  require_gordon_params(r, i);
  auto gens = block_monomials(r, 1, 1, weight_bound,
                              [i](int block, int last) { return block <= i ? last : last - 1; });
  return {IdealFamily::new_part, {r, i, 1}, weight_bound, 1, std::move(gens),
          [r, i](const Partition& p) { return !c_predicate(p, r, i); }};
}

MonomialIdeal j_ideal(int r, int l, int k, int weight_bound) {
  require_gordon_params(r, l);
  if (k < 1)
    throw ParameterError("J_k^l needs k >= 1");
  std::vector<Monomial> gens;
  gens.push_back(Monomial::variable(k, l));
  for (int s = 1; s <= l - 1; ++s)
    gens.push_back(Monomial::variable(k, l - s) * Monomial::variable(k + 1, r - l + s));
  append_consecutive_patterns(gens, r, k + 1, weight_bound);
  return {IdealFamily::j_ideal, {r, l, k}, weight_bound, k, std::move(gens)};
}

MonomialIdeal block_ideal(int r, int c, int m, int weight_bound) {
  if (r < 1 || c < 1 || m < 1)
    throw ParameterError("block ideal needs r, c, m >= 1");
  auto gens = block_monomials(r, c, m, weight_bound, [](int, int last) { return last; });
  return {IdealFamily::block, {r, c, m}, weight_bound, m, std::move(gens)};
}

MonomialIdeal custom_ideal(std::vector<Monomial> generators, int weight_bound, int min_variable) {
  return {IdealFamily::custom, {}, weight_bound, min_variable, std::move(generators)};
}

MonomialIdeal ideal_generators(IdealFamily family, const IdealParams& p, int weight_bound) {
  switch (family) {
  case IdealFamily::zero: return zero_ideal(weight_bound);
  case IdealFamily::gordon: return gordon_ideal(p.r, p.a, weight_bound);
  case IdealFamily::new_part: return new_part_ideal(p.r, p.a, weight_bound);
  case IdealFamily::j_ideal: return j_ideal(p.r, p.a, p.b, weight_bound);
  case IdealFamily::block: return block_ideal(p.r, p.a, p.b, weight_bound);
  case IdealFamily::custom: break;
  }
  throw ParameterError("custom ideals are built from explicit generators");
}

std::string to_string(IdealFamily f) {
  switch (f) {
  case IdealFamily::zero: return "zero";
  case IdealFamily::gordon: return "I";
  case IdealFamily::new_part: return "Iprime";
  case IdealFamily::j_ideal: return "J";
  case IdealFamily::block: return "block";
  case IdealFamily::custom: return "custom";
  }
  return "?";
}

IdealFamily parse_ideal_family(const std::string& s) {
  for (IdealFamily f : {IdealFamily::zero, IdealFamily::gordon, IdealFamily::new_part,
                        IdealFamily::j_ideal, IdealFamily::block})
    if (to_string(f) == s)
      return f;
  throw ParameterError("unknown ideal family '" + s + "' (expected zero, I, Iprime, J or block)");
}

}  // namespace arcpart
