#include "arcpart/recursion.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcpart/hilbert.hpp"
#include "arcpart/ideal.hpp"
#include "arcpart/predicates.hpp"
#include "arcpart/qseries.hpp"

namespace arcpart {

namespace {

std::string index_label(int j, int level, int third) {
  return "(j=" + std::to_string(j) + ",L=" + std::to_string(level) +
         ",index=" + std::to_string(third) + ")";
}

// q^a (1 + q + ... + q^b)
TruncatedSeries shifted_run(int a, int b, int order) {
  TruncatedSeries s(order);
  for (int e = a; e <= a + b && e <= order; ++e)
    s.add_shifted(TruncatedSeries::one(order), e);
  return s;
}

}  // namespace

CoefficientTable::CoefficientTable(Kind kind, int r, int param, int max_level, int order)
    : kind_(kind), r_(r), param_(param), order_(order) {
  require_gordon_params(r, param);
  if (max_level < 2)
    throw ParameterError("coefficient tables start at level 2");
  if (order < 0)
    throw ParameterError("series order must be nonnegative");
  std::vector<TruncatedSeries> first;
  for (int j = 1; j <= r; ++j)
    first.push_back(initial_entry(kind, r, param, j, order));
  levels_.push_back(std::move(first));
  for (int level = 3; level <= max_level; ++level) {
    std::vector<TruncatedSeries> row;
    for (int j = 1; j <= r; ++j)
      row.push_back(step(j, level));
    levels_.push_back(std::move(row));
  }
}

TruncatedSeries CoefficientTable::initial_entry(Kind kind, int r, int param, int j, int order) {
  // B: q^{2(j-1)}(1+...+q^{i-1}) for j <= r-i+1, else q^{2(j-1)}(1+...+q^{r-j})
  // A: q^{2(j-1)}(1+...+q^{r-l}) for j <= l,     else q^{2(j-1)}(1+...+q^{r-j})
  const bool low = kind == Kind::B_hp ? j <= r - param + 1 : j <= param;
  const int run = low ? (kind == Kind::B_hp ? param - 1 : r - param) : r - j;
  return shifted_run(2 * (j - 1), run, order);
}

TruncatedSeries CoefficientTable::step(int j, int level) const {
  if (level < 3 || level - 1 > max_level())
    throw std::out_of_range("coefficient table step needs the previous level");
  TruncatedSeries sum(order_);
  for (int k = 1; k <= r_ - j + 1; ++k)
    sum += at_level(k, level - 1);
  return sum.shift((j - 1) * level);
}

const TruncatedSeries& CoefficientTable::at_level(int j, int level) const {
  if (j < 1 || j > r_ || level < 2 || level > max_level())
    throw std::out_of_range("coefficient table index " + index_label(j, level, third_index(j, level)) +
                            " out of range");
  return levels_[static_cast<std::size_t>(level - 2)][static_cast<std::size_t>(j - 1)];
}

const TruncatedSeries& CoefficientTable::b(int j, int d) const {
  if (kind_ != Kind::B_hp)
    throw std::logic_error("b() on an A table");
  return at_level(j, d - 1);
}

const TruncatedSeries& CoefficientTable::a(int j, int d) const {
  if (kind_ != Kind::A_lz)
    throw std::logic_error("a() on a B table");
  return at_level(j, d);
}

CoefficientTable hp_coefficient_table(int r, int i, int d_max, int order) {
  if (d_max < 3)
    throw ParameterError("the B table needs d_max >= 3");
  return {CoefficientTable::Kind::B_hp, r, i, d_max - 1, order};
}

CoefficientTable lz_coefficient_table(int r, int l, int d_max, int order) {
  if (d_max < 2)
    throw ParameterError("the A table needs d_max >= 2");
  return {CoefficientTable::Kind::A_lz, r, l, d_max, order};
}

std::vector<Check> table_recursion_check(const CoefficientTable& t) {
  std::vector<Check> out;
  const std::string tag = t.kind() == CoefficientTable::Kind::A_lz ? "A" : "B";
  for (int j = 1; j <= t.r(); ++j)
    out.push_back(compare_series(tag + " initial " + index_label(j, 2, t.third_index(j, 2)),
                                 CoefficientTable::initial_entry(t.kind(), t.r(), t.param(), j,
                                                                 t.order()),
                                 t.at_level(j, 2), t.order()));
  for (int level = 3; level <= t.max_level(); ++level)
    for (int j = 1; j <= t.r(); ++j)
      out.push_back(compare_series(tag + " step " + index_label(j, level, t.third_index(j, level)),
                                   t.step(j, level), t.at_level(j, level), t.order()));
  return out;
}

std::vector<Check> coefficient_equality_check(int r, int i, int d_max, int order) {
  const int l = r - i + 1;
  const CoefficientTable a = lz_coefficient_table(r, l, d_max, order);
  // B at third index (r-1)d+m is B(m, d+1), so the B table runs one d further
  const CoefficientTable b = hp_coefficient_table(r, i, d_max + 1, order);
  std::vector<Check> out;
  for (int d = 2; d <= d_max; ++d)
    for (int m = 1; m <= r; ++m)
      out.push_back(compare_series("A_{" + std::to_string(l) + "," + std::to_string(m) + "," +
                                       std::to_string((r - 1) * d + m) + "} = B_{" +
                                       std::to_string(i) + ",...}",
                                   a.a(m, d), b.b(m, d + 1), order));
  return out;
}

std::vector<Check> table_valuation_check(const CoefficientTable& t) {
  std::vector<Check> out;
  for (int level = 2; level <= t.max_level(); ++level)
    for (int j = 1; j <= t.r(); ++j) {
      const int need = std::min((j - 1) * level, t.order() + 1);
      const int got = t.at_level(j, level).valuation();
      Check c;
      c.name = "valuation " + index_label(j, level, t.third_index(j, level));
      if (got < need) {
        c.holds = false;
        c.location = "q^" + std::to_string(got);
        c.expected = ">= " + std::to_string(need);
        c.got = std::to_string(got);
      }
      out.push_back(std::move(c));
    }
  return out;
}

std::pair<int, int> LzSeries::split_index(int r, int t) {
  if (t <= r)
    throw std::invalid_argument("split_index needs t > r");
  const int j = (t - 2) / (r - 1);
  return {j, t - (r - 1) * j};
}

LzSeries::LzSeries(int r, int t_max, int order) : r_(r), order_(order) {
  if (r < 2)
    throw ParameterError("G series need r >= 2");
  if (t_max < r)
    throw ParameterError("G series need t_max >= r");
  if (order < 1)
    throw ParameterError("G series need order >= 1");
  // coefficients lost on the way to each G_t
  std::vector<int> loss(static_cast<std::size_t>(t_max) + 1, 0);
  for (int t = r + 1; t <= t_max; ++t) {
    auto [j, i] = split_index(r, t);
    const int a = (r - 1) * j - i + 2, b = a + 1;
    loss[static_cast<std::size_t>(t)] =
        std::max(loss[static_cast<std::size_t>(a)], loss[static_cast<std::size_t>(b)]) +
        (i - 1) * j;
  }
  working_order_ = order + *std::max_element(loss.begin(), loss.end());
  g_.resize(static_cast<std::size_t>(t_max) + 1);
  for (int l = 1; l <= r; ++l)
    g_[static_cast<std::size_t>(l)] = product_side(r, r + 1 - l, working_order_);
  for (int t = r + 1; t <= t_max; ++t) {
    auto [j, i] = split_index(r, t);
    const int a = (r - 1) * j - i + 2;
    const TruncatedSeries diff = g_[static_cast<std::size_t>(a)] - g_[static_cast<std::size_t>(a + 1)];
    try {
      g_[static_cast<std::size_t>(t)] = diff.divide_by_q_power((i - 1) * j);
    } catch (const std::domain_error& e) {
      throw std::domain_error("G_" + std::to_string(t) + ": " + e.what());
    }
  }
  for (auto& s : g_)
    if (s.order() > order)
      s = s.restrict(order);
}

const TruncatedSeries& LzSeries::operator()(int t) const {
  if (t < 1 || t > t_max())
    throw std::out_of_range("G_" + std::to_string(t) + " was not computed");
  return g_[static_cast<std::size_t>(t)];
}

LzSeries lz_g_series(int r, int t_max, int order) { return {r, t_max, order}; }

std::vector<Check> empirical_hypothesis_check(int r, int d_max, int order) {
  if (d_max < 1)
    throw ParameterError("empirical hypothesis check needs d_max >= 1");
  if (order < d_max + 2)
    throw ParameterError("empirical hypothesis check needs order >= d_max + 2");
  const LzSeries g(r, (r - 1) * d_max + r, order);
  std::vector<Check> out;
  for (int d = 1; d <= d_max; ++d)
    for (int i = 1; i <= r; ++i) {
      const int t = (r - 1) * d + i;
      const int need = i == r ? d + 2 : d + 1;
      const TruncatedSeries rest = g(t) - TruncatedSeries::one(order);
      Check c;
      c.name = "G_" + std::to_string(t) + " - 1 divisible by q^" + std::to_string(need) +
               " (d=" + std::to_string(d) + ",i=" + std::to_string(i) + ")";
      if (rest.valuation() < need) {
        c.holds = false;
        c.location = "q^" + std::to_string(rest.valuation());
        c.expected = "0";
        c.got = to_string(rest[rest.valuation()]);
      }
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Check> lz_resubstitution_check(const LzSeries& g) {
  std::vector<Check> out;
  const int r = g.r();
  for (int t = r + 1; t <= g.t_max(); ++t) {
    auto [j, i] = LzSeries::split_index(r, t);
    const int a = (r - 1) * j - i + 2;
    TruncatedSeries rhs = g(t).shift((i - 1) * j) + g(a + 1);
    out.push_back(compare_series("G_" + std::to_string(a) + " = q^" + std::to_string((i - 1) * j) +
                                     " G_" + std::to_string(t) + " + G_" + std::to_string(a + 1),
                                 g(a), rhs, g.order()));
  }
  return out;
}

TruncatedSeries h_full(int r, int k, int order) {
  if (r < 2 || k < 1)
    throw ParameterError("H^k needs r >= 2 and k >= 1");
  std::vector<Monomial> gens;
  for (int t = k; t * r <= order; ++t)
    for (int n = 0; n <= r - 1; ++n)
      gens.push_back(Monomial::variable(t, r - n) * Monomial::variable(t + 1, n));
  return standard_monomial_series(custom_ideal(std::move(gens), order, k), order);
}

std::vector<Check> h_lemma_check(int r, int k, int order) {
  std::vector<Check> out;
  const std::string at = "(r=" + std::to_string(r) + ",k=" + std::to_string(k) + ")";
  std::vector<TruncatedSeries> next(static_cast<std::size_t>(r) + 1);
  for (int l = 1; l <= r; ++l)
    next[static_cast<std::size_t>(l)] = h_series(r, l, k + 1, order, HConvention::j_ideal);
  out.push_back(compare_series("H_r^k = H^k " + at, h_full(r, k, order),
                               h_series(r, r, k, order, HConvention::j_ideal), order));
  out.push_back(compare_series("H_1^k = H^{k+1} " + at, h_full(r, k + 1, order),
                               h_series(r, 1, k, order, HConvention::j_ideal), order));
  for (int l = 1; l <= r; ++l) {
    TruncatedSeries rhs(order);
    for (int j = 1; j <= l; ++j)
      rhs.add_shifted(next[static_cast<std::size_t>(r - l + j)], (l - j) * k);
    out.push_back(compare_series("H_" + std::to_string(l) + "^k expansion " + at,
                                 h_series(r, l, k, order, HConvention::j_ideal), rhs, order));
  }
  return out;
}

std::vector<Check> convergence_check(int r, int i, int d_max, int order) {
  require_gordon_params(r, i);
  if (d_max < 3)
    throw ParameterError("convergence check needs d_max >= 3");
  const int l = r + 1 - i;
  const std::string at = "(r=" + std::to_string(r) + ",i=" + std::to_string(i) + ")";
  std::vector<Check> out;

  const TruncatedSeries h1 = h_series(r, i, 1, order, HConvention::j_ideal);
  const TruncatedSeries product = product_side(r, i, order);
  const LzSeries g(r, (r - 1) * d_max + r, order);
  out.push_back(compare_series("H_i^1 = HP(S/I_{r,i}) " + at,
                               standard_monomial_series(gordon_ideal(r, i, order), order), h1,
                               order));
  out.push_back(compare_series("G_l = product side " + at, product, g(l), order));
  out.push_back(compare_series("H_i^1 = G_l " + at, g(l), h1, order));

  const CoefficientTable btab = hp_coefficient_table(r, i, d_max + 1, order);
  const CoefficientTable atab = lz_coefficient_table(r, l, d_max, order);
  for (int d = 3; d <= d_max; ++d) {
    TruncatedSeries sum(order);
    for (int j = 1; j <= r; ++j)
      sum += btab.b(j, d) * h_series(r, r - j + 1, d, order, HConvention::j_ideal);
    out.push_back(compare_series("H_i^1 = sum_j B H^d (d=" + std::to_string(d) + ") " + at, h1,
                                 sum, order));
  }
  for (int d = 2; d <= d_max; ++d) {
    TruncatedSeries sum(order);
    for (int j = 1; j <= r; ++j)
      sum += atab.a(j, d) * g((r - 1) * d + j);
    out.push_back(compare_series("G_l = sum_j A G (d=" + std::to_string(d) + ") " + at, g(l), sum,
                                 order));
  }
  const int reach = std::min(order, d_max - 1);
  out.push_back(compare_series("A_{l,1} alone matches G_l (d=" + std::to_string(d_max) + ") " + at,
                               g(l), atab.a(1, d_max), reach));
  out.push_back(compare_series("B_{i,1} alone matches H_i^1 (d=" + std::to_string(d_max) + ") " +
                                   at,
                               h1, btab.b(1, d_max + 1), reach));
  return out;
}

}  // namespace arcpart
