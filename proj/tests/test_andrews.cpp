#include <doctest.h>

#include <set>

#include "arcpart/andrews.hpp"
#include "arcpart/bijections.hpp"
#include "arcpart/counting.hpp"

using namespace arcpart;

TEST_CASE("rr_k system holds on both sides") {
  for (int k = 1; k <= 3; ++k)
    for (SystemSide side : {SystemSide::c, SystemSide::b}) {
      const SystemReport rep = andrews_system_check(AndrewsSystem::rr_k, side, k, 10, 14);
      CHECK(rep.all_hold());
      CHECK(rep.equations.size() == 3);
      for (const EquationResult& eq : rep.equations)
        CHECK(eq.checked > 0);
    }
}

TEST_CASE("gordon3 system holds on both sides") {
  for (SystemSide side : {SystemSide::c, SystemSide::b}) {
    const SystemReport rep = andrews_system_check(AndrewsSystem::gordon3, side, 1, 12, 16);
    CHECK(rep.all_hold());
    CHECK(rep.equations.size() == 4);
  }
}

TEST_CASE("fixed-length refinement for k = 1") {
  for (int i = 1; i <= 2; ++i)
    for (int n = 0; n <= 18; ++n)
      for (int m = 0; m <= n; ++m)
        CHECK(count(CountFamily::shifted_c(1, i, m), n) == count(CountFamily::gordon_b(2, i, m), n));
}

TEST_CASE("bijection examples") {
  CHECK(bijection_apply(BijectionName::g3_second_eq, Direction::forward, Partition{2, 2, 1}) ==
        Partition{2});
  CHECK(bijection_apply(BijectionName::rr_shift, Direction::forward, Partition{4, 3}, {1}) ==
        Partition{3, 2});
  CHECK_THROWS_AS(
      bijection_apply(BijectionName::g3_second_eq, Direction::forward, Partition{3, 1}),
      DomainError);
  CHECK_THROWS_AS(bijection_apply(BijectionName::rr_shift, Direction::forward, Partition{1}, {0}),
                  DomainError);
}

TEST_CASE("bijections round-trip and stay injective") {
  for (BijectionName name : all_bijections)
    for (int k = 1; k <= 3; ++k) {
      const BijectionParams params{k};
      std::set<Partition> images;
      std::size_t domain = 0;
      for (int n = 0; n <= 16; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
          if (!in_domain(name, p, params))
            continue;
          ++domain;
          const Partition img = bijection_apply(name, Direction::forward, p, params);
          INFO(to_string(name), " k=", k, " ", p.to_string(), " -> ", img.to_string());
          CHECK(in_codomain(name, img, params));
          const auto [w, len] = image_shape(name, p.weight(), static_cast<int>(p.length()), params);
          CHECK(img.weight() == w);
          CHECK(static_cast<int>(img.length()) == len);
          CHECK(bijection_apply(name, Direction::inverse, img, params) == p);
          CHECK(images.insert(img).second);
        }
      CHECK(domain > 0);
    }
}

TEST_CASE("bijections are onto their codomains") {
  for (BijectionName name : all_bijections)
    for (int k = 1; k <= 2; ++k) {
      const BijectionParams params{k};
      for (int n = 0; n <= 14; ++n)
        for (const Partition& p : enumerate_partitions(n))
          if (in_codomain(name, p, params)) {
            const Partition pre = bijection_apply(name, Direction::inverse, p, params);
            INFO(to_string(name), " ", p.to_string());
            CHECK(in_domain(name, pre, params));
            CHECK(bijection_apply(name, Direction::forward, pre, params) == p);
          }
    }
}

TEST_CASE("g3_second_eq shape bookkeeping") {
  CHECK(image_shape(BijectionName::g3_second_eq, 9, 4) == std::pair{5, 2});
}

TEST_CASE("bijection names round-trip") {
  for (BijectionName b : all_bijections)
    CHECK(parse_bijection(to_string(b)) == b);
  CHECK_THROWS(parse_bijection("nope"));
}
