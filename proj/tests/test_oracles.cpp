#include <doctest.h>

#include "fairspan/fairness.hpp"
#include "fairspan/generators.hpp"
#include "fairspan/oracles.hpp"
#include "test_util.hpp"

using namespace fairspan;
using testutil::alloc1;

TEST_CASE("enumerator yields every allocation once, lexicographically") {
  AllocationEnumerator enumerate(2, 2);
  std::vector<std::vector<int>> got;
  while (auto alloc = enumerate.next()) got.push_back(alloc->assignment());
  CHECK(got == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  AllocationEnumerator nine(3, 2);
  CHECK(nine.total() == 9);
  int count = 0;
  while (nine.next()) ++count;
  CHECK(count == 9);
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(AllocationEnumerator(2, 30, 10'000'000), CapExceeded);
  CHECK_THROWS_AS(allocation_count_checked(10, 30, kDefaultEnumCap), CapExceeded);
  CHECK(allocation_count_checked(2, 10, 1024) == 1024);
  try {
    allocation_count_checked(2, 30, 10'000'000);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.required == (1ull << 30));
    CHECK(e.cap == 10'000'000);
  }
}

TEST_CASE("bruteforce optimum on pinned instances") {
  Instance lb = lb_three_halves_instance(2, 2, Rational(1, 2));
  OptResult opt = brute_force_opt(lb);
  CHECK(opt.value == Rational(1));
  CHECK(opt.witness == alloc1(2, {1, 2}));
  CHECK(opt.enumerated == 4);

  Instance zero = testutil::zero_instance(Kind::chores, 2, 3);
  CHECK(brute_force_opt(zero).value == Rational(0));

  // goods: hand the unique valued good to agent 1 and one unit good to each other
  OptResult goods_opt = brute_force_opt(goods_lb_instance(3, 3));
  CHECK(goods_opt.value == Rational(1));
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Kind kind = seed % 2 ? Kind::chores : Kind::goods;
    Instance inst = random_instance(2 + seed % 3, 3 + seed % 4, kind, seed * 37,
                                    RandomFamily::uniform_unit);
    OptResult fast = brute_force_opt(inst);
    OptResult slow = brute_force_opt_serial(inst);
    CHECK(fast.value == slow.value);
    CHECK(fast.witness == slow.witness);
    CHECK(fast.enumerated == slow.enumerated);

    if (kind == Kind::chores) {
      CHECK(best_proportionable_makespan(inst) == best_proportionable_makespan_serial(inst));
    } else {
      CHECK(best_proportionable_welfare(inst) == best_proportionable_welfare_serial(inst));
    }
  }
}

TEST_CASE("best proportionable makespan on the lower-bound family") {
  // the cost-minimizing anti-diagonal allocation is mean-efficient with
  // makespan 3/2 - eps/2, which is the filtered minimum here
  auto expected = [](const Rational& eps) { return Rational(3, 2) - eps / Rational(2); };
  for (int m : {2, 3}) {
    for (const Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
      Instance inst = lb_three_halves_instance(m, m, eps);
      auto best = best_proportionable_makespan(inst);
      REQUIRE(best.has_value());
      CHECK(*best == expected(eps));
    }
  }
}

TEST_CASE("best proportionable makespan of the zero instance") {
  CHECK(best_proportionable_makespan(testutil::zero_instance(Kind::chores, 2, 2)) == Rational(0));
  CHECK(best_proportionable_welfare(testutil::zero_instance(Kind::goods, 2, 2)) == Rational(0));
}

TEST_CASE("best proportionable welfare on a normalized goods instance") {
  Instance inst = testutil::goods({{"1/2", "1/2"}, {"1/4", "3/4"}});
  CHECK(best_proportionable_welfare(inst) == Rational(1, 2));
}

TEST_CASE("the optimum lower-bounds every allocation") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = random_instance(3, 4, Kind::chores, seed * 67, RandomFamily::uniform_unit);
    const Rational opt = brute_force_opt(inst).value;
    AllocationEnumerator enumerate(3, 4);
    while (auto alloc = enumerate.next()) CHECK(opt <= makespan(inst, *alloc));
  }
}

TEST_CASE("kind preconditions of the filtered oracles") {
  Instance goods = testutil::goods({{"1", "1"}, {"1", "1"}});
  CHECK_THROWS_AS(best_proportionable_makespan(goods), std::invalid_argument);
  Instance chores = testutil::chores({{"1", "1"}, {"1", "1"}});
  CHECK_THROWS_AS(best_proportionable_welfare(chores), std::invalid_argument);
}

TEST_CASE("best proportionable makespan sits between OPT and 3/2 OPT") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = random_instance(3, 5, Kind::chores, seed * 41, RandomFamily::uniform_unit);
    Rational opt = brute_force_opt(inst).value;
    auto best = best_proportionable_makespan(inst);
    REQUIRE(best.has_value());
    CHECK(opt <= *best);
    CHECK(*best <= Rational(3, 2) * opt);
  }
}

TEST_CASE("normalized instances close the gap entirely") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance chores = random_instance(3, 5, Kind::chores, seed * 43,
                                      RandomFamily::normalized_uniform);
    CHECK(best_proportionable_makespan(chores) == brute_force_opt(chores).value);

    Instance goods = random_instance(3, 5, Kind::goods, seed * 47,
                                     RandomFamily::normalized_uniform);
    CHECK(best_proportionable_welfare(goods) == brute_force_opt(goods).value);
  }
}

TEST_CASE("goods lower-bound family admits no proportionable welfare") {
  for (int m : {2, 3}) {
    Instance inst = goods_lb_instance(m, m);
    CHECK(brute_force_opt(inst).value == Rational(1));
    CHECK(best_proportionable_welfare(inst) == Rational(0));
  }
}

TEST_CASE("enumeration report bundles the oracle results") {
  Instance lb = lb_three_halves_instance(2, 2, Rational(1, 2));
  EnumerationReport report = make_enumeration_report(lb);
  CHECK(report.opt == Rational(1));
  CHECK(report.count_enumerated == 4);
  REQUIRE(report.best_proportionable.has_value());
  CHECK(report.opt <= *report.best_proportionable);
  CHECK(*report.best_proportionable == Rational(5, 4));
}
