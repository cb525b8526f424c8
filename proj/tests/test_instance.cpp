#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fairspan/generators.hpp"
#include "fairspan/instance.hpp"
#include "test_util.hpp"

using namespace fairspan;
using testutil::alloc1;

namespace {
const std::vector<std::vector<std::string>> kLb22 = {{"1", "5/4"}, {"1/2", "1"}};
}

TEST_CASE("bundle_cost sums the selected entries") {
  Instance inst = testutil::chores(kLb22);
  std::vector<int> both = {0, 1};
  CHECK(bundle_cost(inst, 0, both) == Rational(9, 4));
  CHECK(bundle_cost(inst, 1, std::vector<int>{}) == Rational(0));
  Instance sym = testutil::chores({{"1", "2"}, {"2", "1"}});
  std::vector<int> first = {0};
  CHECK(bundle_cost(sym, 1, first) == Rational(2));
  CHECK_THROWS_AS(bundle_cost(sym, 2, first), std::out_of_range);
  std::vector<int> bogus = {5};
  CHECK_THROWS_AS(bundle_cost(sym, 0, bogus), std::out_of_range);
}

TEST_CASE("bundle_cost is additive over disjoint job sets") {
  Instance inst = fairspan::random_instance(3, 7, Kind::chores, 99,
                                            RandomFamily::uniform_unit);
  for (int machine = 0; machine < 3; ++machine) {
    std::vector<int> left = {0, 2, 5};
    std::vector<int> right = {1, 6};
    std::vector<int> joined = {0, 1, 2, 5, 6};
    CHECK(bundle_cost(inst, machine, joined) ==
          bundle_cost(inst, machine, left) + bundle_cost(inst, machine, right));
  }
}

TEST_CASE("makespan of known allocations") {
  Instance lb = testutil::chores(kLb22);
  CHECK(makespan(lb, alloc1(2, {1, 2})) == Rational(1));

  Instance zero = testutil::zero_instance(Kind::chores, 2, 2);
  CHECK(makespan(zero, alloc1(2, {2, 1})) == Rational(0));

  Instance norm = testutil::chores({{"1/2", "1/2"}, {"1/4", "3/4"}});
  CHECK(makespan(norm, alloc1(2, {2, 1})) == Rational(1, 2));
}

TEST_CASE("makespan rejects goods and mismatched dimensions") {
  Instance goods = testutil::goods(kLb22);
  CHECK_THROWS_AS(makespan(goods, alloc1(2, {1, 2})), std::invalid_argument);
  Instance lb = testutil::chores(kLb22);
  CHECK_THROWS_AS(makespan(lb, alloc1(2, {1, 2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(makespan(lb, alloc1(3, {1, 2})), std::invalid_argument);
}

TEST_CASE("total_cost of known allocations") {
  Instance lb = testutil::chores(kLb22);
  CHECK(total_cost(lb, alloc1(2, {1, 2})) == Rational(2));
  Instance zero = testutil::zero_instance(Kind::chores, 3, 4);
  CHECK(total_cost(zero, testutil::random_allocation(3, 4, 7)) == Rational(0));
  Instance sym = testutil::chores({{"1", "2"}, {"2", "1"}});
  CHECK(total_cost(sym, alloc1(2, {2, 1})) == Rational(4));
}

TEST_CASE("makespan and total cost bracket each other on chores") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = fairspan::random_instance(3, 5, Kind::chores, seed,
                                              RandomFamily::uniform_unit);
    Allocation alloc = testutil::random_allocation(3, 5, seed + 1000);
    Rational span = makespan(inst, alloc);
    Rational total = total_cost(inst, alloc);
    CHECK(span <= total);
    CHECK(total <= Rational(3) * span);
  }
}

TEST_CASE("normalization_factor detects equal row sums") {
  CHECK(normalization_factor(testutil::chores({{"1/2", "1/2"}, {"1/4", "3/4"}})) == Rational(1));
  CHECK(normalization_factor(testutil::chores({{"1", "2"}, {"2", "1"}})) == Rational(3));
  CHECK_FALSE(normalization_factor(testutil::chores(kLb22)).has_value());
}

TEST_CASE("normalization_factor is invariant under job permutation") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = fairspan::random_instance(3, 4, Kind::chores, seed,
                                              RandomFamily::normalized_uniform);
    std::vector<std::vector<Rational>> permuted(3, std::vector<Rational>(4));
    std::vector<int> order = {2, 0, 3, 1};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) permuted[i][j] = inst.cost(i, order[j]);
    }
    CHECK(normalization_factor(Instance::from_rows(Kind::chores, permuted)) ==
          normalization_factor(inst));
  }
}

TEST_CASE("instance validation") {
  std::vector<Rational> ok(4, Rational(1));
  CHECK_THROWS_AS(Instance(Kind::chores, 1, 4, ok), std::invalid_argument);
  CHECK_THROWS_AS(Instance(Kind::chores, 4, 1, ok), std::invalid_argument);
  CHECK_THROWS_AS(Instance(Kind::chores, 2, 3, ok), std::invalid_argument);
  std::vector<Rational> negative = {Rational(1), Rational(-1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(Instance(Kind::chores, 2, 2, negative), std::invalid_argument);
  CHECK_THROWS_AS(Instance(Kind::goods, 2, 2, negative), std::invalid_argument);
}

TEST_CASE("allocation bundles") {
  Allocation alloc = alloc1(3, {2, 2, 1});
  CHECK(alloc.bundle(0) == std::vector<int>{2});
  CHECK(alloc.bundle(1) == std::vector<int>{0, 1});
  CHECK(alloc.bundle(2).empty());
  auto bundles = alloc.bundles();
  CHECK(bundles.size() == 3);
  CHECK(bundles[1] == std::vector<int>{0, 1});
  CHECK_THROWS_AS(Allocation(2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Allocation(2, {-1, 0}), std::invalid_argument);
}
