#include <doctest.h>

#include "arcpart/hilbert.hpp"
#include "arcpart/qseries.hpp"
#include "arcpart/recursion.hpp"

using namespace arcpart;

namespace {

void require_all(const std::vector<Check>& checks) {
  CHECK_FALSE(checks.empty());
  for (const Check& c : checks) {
    INFO(c.name, " @ ", c.location, " expected ", c.expected, " got ", c.got);
    CHECK(c.holds);
  }
}

TruncatedSeries poly(int order, std::initializer_list<long> cs) {
  return TruncatedSeries::from_ints(order, cs);
}

}  // namespace

TEST_CASE("initial coefficients") {
  const int order = 10;
  // r = 2, i = 2, l = 1: both first entries are 1 + q
  CHECK(CoefficientTable::initial_entry(CoefficientTable::Kind::B_hp, 2, 2, 1, order) ==
        poly(order, {1, 1}));
  CHECK(CoefficientTable::initial_entry(CoefficientTable::Kind::A_lz, 2, 1, 1, order) ==
        poly(order, {1, 1}));
  const CoefficientTable b = hp_coefficient_table(2, 2, 4, order);
  const CoefficientTable a = lz_coefficient_table(2, 1, 4, order);
  CHECK(b.b(1, 3) == poly(order, {1, 1}));
  CHECK(a.a(1, 2) == poly(order, {1, 1}));
  CHECK(b.third_index(1, 2) == 3);
  // r = 3, i = 2, j = 2 <= r-i+1: q^2 (1 + q)
  CHECK(CoefficientTable::initial_entry(CoefficientTable::Kind::B_hp, 3, 2, 2, order) ==
        poly(order, {0, 0, 1, 1}));
  // r = 3, i = 2, j = 3 > r-i+1: q^4 (1 + ... + q^{r-j}) = q^4
  CHECK(CoefficientTable::initial_entry(CoefficientTable::Kind::B_hp, 3, 2, 3, order) ==
        poly(order, {0, 0, 0, 0, 1}));
}

TEST_CASE("coefficient tables satisfy their recursions") {
  for (int r = 2; r <= 4; ++r)
    for (int i = 1; i <= r; ++i) {
      const CoefficientTable b = hp_coefficient_table(r, i, 6, 20);
      const CoefficientTable a = lz_coefficient_table(r, r - i + 1, 6, 20);
      require_all(table_recursion_check(b));
      require_all(table_recursion_check(a));
      require_all(table_valuation_check(b));
      require_all(table_valuation_check(a));
      require_all(coefficient_equality_check(r, i, 6, 20));
    }
}

TEST_CASE("table parameter errors") {
  CHECK_THROWS(hp_coefficient_table(3, 1, 2, 10));
  CHECK_THROWS(lz_coefficient_table(3, 1, 1, 10));
  CHECK_THROWS(hp_coefficient_table(3, 4, 4, 10));
}

TEST_CASE("LZ index split") {
  for (int r = 2; r <= 5; ++r)
    for (int t = r + 1; t <= 40; ++t) {
      const auto [j, i] = LzSeries::split_index(r, t);
      CHECK((r - 1) * j + i == t);
      CHECK(i >= 1);
      CHECK(i <= r);
    }
}

TEST_CASE("LZ series") {
  for (int r = 2; r <= 4; ++r) {
    const LzSeries g(r, (r - 1) * 6 + r, 20);
    for (int l = 1; l <= r; ++l)
      CHECK(g(l) == product_side(r, r + 1 - l, 20));
    require_all(lz_resubstitution_check(g));
    require_all(empirical_hypothesis_check(r, 6, 20));
    CHECK(g(1).order() == 20);
  }
  CHECK_THROWS(LzSeries(3, 2, 10));
}

TEST_CASE("H lemma") {
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k)
      require_all(h_lemma_check(r, k, 24));
}

TEST_CASE("h_full is the J ideal with l = r") {
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 3; ++k)
      CHECK(h_full(r, k, 18) == h_series(r, r, k, 18, HConvention::j_ideal));
}

TEST_CASE("convergence") {
  require_all(convergence_check(2, 2, 22, 20));
  for (int i = 1; i <= 3; ++i)
    require_all(convergence_check(3, i, 22, 20));
  CHECK_THROWS(convergence_check(3, 1, 2, 10));
}
