#include <doctest.h>

#include <set>

#include "arcpart/counting.hpp"
#include "arcpart/partition.hpp"
#include "arcpart/predicates.hpp"
#include "oracles.hpp"

using namespace arcpart;

namespace {

oracle::Parts parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST_CASE("partition invariants") {
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition{}.empty());
  const Partition p{4, 4, 3, 2, 2, 2};
  CHECK(p.weight() == 17);
  CHECK(p.length() == 6);
  CHECK(p.smallest() == 2);
  CHECK(p.at(0) == 0);
  CHECK(p.at(-3) == 0);
  CHECK(p.at(3) == 3);
  CHECK(p.from_right(1) == 2);
  CHECK(p.multiplicity(2) == 3);
  CHECK_THROWS(Partition{1, 2});
  CHECK_THROWS(Partition{2, 0});
}

TEST_CASE("enumeration matches the Euler recurrence") {
  const auto p = oracle::euler_partition_counts(25);
  for (int n = 0; n <= 25; ++n)
    CHECK(enumerate_partitions(n).size() == p[static_cast<std::size_t>(n)].get_ui());
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(4).size() == 5);
}

TEST_CASE("enumeration is canonical and complete") {
  for (int n = 0; n <= 14; ++n) {
    const auto got = enumerate_partitions(n);
    CHECK(std::is_sorted(got.begin(), got.end()));
    std::set<oracle::Parts> mine, ref;
    for (const Partition& p : got)
      mine.insert(parts_of(p));
    for (const auto& p : oracle::all_partitions(n))
      ref.insert(p);
    CHECK(mine == ref);
    CHECK(mine.size() == got.size());
  }
}

TEST_CASE("enumeration with a length bound") {
  EnumerationOptions opts;
  opts.max_length = 2;
  for (const Partition& p : enumerate_partitions(10, opts))
    CHECK(p.length() <= 2);
  CHECK(enumerate_partitions(10, opts).size() == 6);  // (10) plus five two-part splits
  EnumerationOptions exact;
  exact.exact_length = 3;
  CHECK(enumerate_partitions(9, exact).size() == 7);
}

TEST_CASE("gordon B examples") {
  CHECK(gordon_b_predicate(Partition{}, 2, 1));
  CHECK(gordon_b_predicate(Partition{3, 1}, 2, 2));
  CHECK_FALSE(gordon_b_predicate(Partition{2, 1}, 2, 2));
  CHECK_FALSE(gordon_b_predicate(Partition{2, 2, 1}, 3, 2));
  CHECK_THROWS_AS(gordon_b_predicate(Partition{1}, 1, 1), ParameterError);
  CHECK_THROWS_AS(gordon_b_predicate(Partition{1}, 3, 4), ParameterError);

  std::vector<Partition> nine;
  for (const Partition& p : enumerate_partitions(9))
    if (gordon_b_predicate(p, 2, 2))
      nine.push_back(p);
  std::set<Partition> expected{{9}, {8, 1}, {7, 2}, {6, 3}, {5, 3, 1}};
  CHECK(std::set<Partition>(nine.begin(), nine.end()) == expected);
}

TEST_CASE("congruence A examples") {
  CHECK(congruence_a_predicate(Partition{}, 2, 2));
  CHECK(congruence_a_predicate(Partition{4, 1}, 2, 2));
  CHECK_FALSE(congruence_a_predicate(Partition{5}, 2, 2));
  CHECK_FALSE(congruence_a_predicate(Partition{2}, 2, 2));
}

TEST_CASE("predicates agree with literal evaluation") {
  for (int n = 0; n <= 14; ++n)
    for (const Partition& p : enumerate_partitions(n)) {
      const auto q = parts_of(p);
      for (int r = 2; r <= 5; ++r)
        for (int i = 1; i <= r; ++i) {
          CHECK(gordon_b_predicate(p, r, i) == oracle::gordon_b(q, r, i));
          CHECK(congruence_a_predicate(p, r, i) == oracle::congruence_a(q, r, i));
          CHECK(new_parts(p, r, i).values == oracle::new_parts(q, r, i));
          CHECK(c_predicate(p, r, i, CForm::remark) == oracle::c_remark(q, r, i));
          CHECK(c_predicate(p, r, i, CForm::conjecture) == oracle::c_conjecture(q, r, i));
        }
    }
}

TEST_CASE("new parts examples") {
  const NewPartProfile prof = new_parts(Partition{4, 4, 3, 2, 2, 2}, 4, 4);
  CHECK(prof.at(1) == 2);
  CHECK(prof.at(2) == 2);
  CHECK(prof.at(3) == 4);
  CHECK(prof.count_nonzero == 3);

  const NewPartProfile empty = new_parts(Partition{}, 3, 2);
  CHECK(empty.values == std::vector<int>{0, 0, 0});
  CHECK(empty.count_nonzero == 0);

  const NewPartProfile small = new_parts(Partition{2, 1}, 3, 3);
  CHECK(small.values == std::vector<int>{1, 2, 0});
  CHECK(small.count_nonzero == 2);
  CHECK(small.prefix_sum(2) == 3);
}

TEST_CASE("new parts: once zero, always zero") {
  for (int n = 0; n <= 16; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int r = 2; r <= 5; ++r)
        for (int i = 1; i <= r; ++i) {
          const NewPartProfile prof = new_parts(p, r, i);
          bool seen_zero = false;
          int nonzero = 0;
          for (int l = 1; l <= r; ++l) {
            if (seen_zero)
              CHECK(prof.at(l) == 0);
            seen_zero = seen_zero || prof.at(l) == 0;
            if (l < r)
              nonzero += prof.at(l) != 0;
          }
          CHECK(prof.count_nonzero == nonzero);
        }
}

TEST_CASE("C condition examples") {
  for (int r = 2; r <= 4; ++r)
    for (int i = 1; i <= r; ++i) {
      CHECK(c_predicate(Partition{}, r, i, CForm::conjecture));
      CHECK(c_predicate(Partition{}, r, i, CForm::remark));
    }
  CHECK(c_predicate(Partition{2, 1}, 3, 3, CForm::conjecture));
  CHECK_FALSE(c_predicate(Partition{1, 1}, 2, 2, CForm::conjecture));
  CHECK_FALSE(c_predicate(Partition{1, 1}, 2, 2, CForm::remark));
}

TEST_CASE("C condition: the two forms agree") {
  for (int n = 0; n <= 18; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int r = 2; r <= 5; ++r)
        for (int i = 1; i <= r; ++i)
          CHECK(c_predicate(p, r, i, CForm::conjecture) == c_predicate(p, r, i, CForm::remark));
}

TEST_CASE("shifted predicates") {
  CHECK(shifted_c_predicate(Partition{}, 0, 1, 1));
  CHECK(shifted_b_predicate(Partition{}, 0, 1, 1));
  CHECK_FALSE(shifted_c_predicate(Partition{4, 2}, 2, 2, 2));
  CHECK(shifted_b_predicate(Partition{5, 3}, 2, 2, 1));
  CHECK_FALSE(shifted_b_predicate(Partition{5, 4}, 2, 2, 1));
  CHECK_FALSE(shifted_b_predicate(Partition{5, 2}, 2, 2, 1));
  CHECK(shifted_b_predicate(Partition{5, 2}, 2, 2, 2));
  CHECK_THROWS(shifted_c_predicate(Partition{4, 2}, 3, 2, 2));
}

TEST_CASE("count examples") {
  CHECK(count(CountFamily::gordon_b(2, 2), 9) == 5);
  CHECK(count(CountFamily::gordon_a(2, 2), 9) == 5);
  for (auto fam : {CountFamily::gordon_a(3, 1), CountFamily::gordon_b(4, 2),
                   CountFamily::new_part(5, 3), CountFamily::shifted_c(2, 1),
                   CountFamily::shifted_b(3, 2)})
    CHECK(count(fam, 0) == 1);
  CHECK(count(CountFamily::gordon_b(2, 2), -1) == 0);
  CHECK_THROWS_AS(count(CountFamily::gordon_b(2, 3), 4), ParameterError);
  CHECK_THROWS_AS(count(CountFamily::shifted_c(0, 1), 4), ParameterError);
  CHECK_THROWS_AS(count(CountFamily::shifted_b(1, 3), 4), ParameterError);
}

TEST_CASE("pruned counts equal filtered counts") {
  std::vector<CountFamily> families;
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i <= r; ++i) {
      families.push_back(CountFamily::gordon_a(r, i));
      families.push_back(CountFamily::gordon_b(r, i));
      families.push_back(CountFamily::new_part(r, i));
      families.push_back(CountFamily::new_part(r, i, std::nullopt, CForm::conjecture));
    }
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= 2; ++i) {
      families.push_back(CountFamily::shifted_c(k, i));
      families.push_back(CountFamily::shifted_b(k, i));
      families.push_back(CountFamily::shifted_c(k, i, 3));
      families.push_back(CountFamily::shifted_b(k, i, 2));
    }
  families.push_back(CountFamily::gordon_b(3, 2, 4));
  families.push_back(CountFamily::new_part(3, 3, 5));
  for (const CountFamily& f : families)
    for (int n = 0; n <= 16; ++n) {
      INFO(f.describe(), " n=", n);
      CHECK(count(f, n) == count_by_filter(f, n));
    }
}

TEST_CASE("counts against the literal oracle") {
  for (int n = 0; n <= 16; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int i = 1; i <= r; ++i) {
        CHECK(count(CountFamily::gordon_b(r, i), n) ==
              oracle::count_if(n, [&](const oracle::Parts& p) { return oracle::gordon_b(p, r, i); }));
        CHECK(count(CountFamily::new_part(r, i), n) ==
              oracle::count_if(n, [&](const oracle::Parts& p) { return oracle::c_remark(p, r, i); }));
      }
}

TEST_CASE("Gordon's identities at small scale") {
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i <= r; ++i)
      for (int n = 0; n <= 20; ++n)
        CHECK(count(CountFamily::gordon_a(r, i), n) == count(CountFamily::gordon_b(r, i), n));
}

TEST_CASE("family names round-trip") {
  for (FamilyTag t : {FamilyTag::A, FamilyTag::B, FamilyTag::C, FamilyTag::c2k, FamilyTag::b2k,
                      FamilyTag::c3, FamilyTag::b3})
    CHECK(parse_family(to_string(t)) == t);
  CHECK_THROWS_AS(parse_family("Z"), ParameterError);
  CHECK(parse_cform("conjecture") == CForm::conjecture);
  CHECK_THROWS(parse_cform("other"));
}
