#include "hullsep/oracle.hpp"

#include "doctest.h"
#include "hullsep/errors.hpp"
#include "hullsep/hull.hpp"
#include "hullsep/separator.hpp"
#include "testkit.hpp"

using namespace hullsep;
using testkit::make_pm;
using testkit::PM;

TEST_CASE("oracle fixed instances") {
  CHECK(solve_subsets(make_pm({{0, 0}}, {{0, 2}}).plus,
                      make_pm({{0, 0}}, {{0, 2}}).minus)
            .k_min == 0);

  PM pm = make_pm({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
  SeparatorSolution s = solve_subsets(pm.plus, pm.minus);
  CHECK(s.k_min == 1);
  CHECK(s.removed_ids == std::vector<int>{1});  // lexicographically first

  PM cross = make_pm({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
  CHECK(solve_subsets(cross.plus, cross.minus).k_min == 1);

  PM coincident = make_pm({{0, 0}}, {{0, 0}});
  SeparatorSolution c = solve_subsets(coincident.plus, coincident.minus);
  CHECK(c.k_min == 1);
  CHECK(c.removed_ids == std::vector<int>{0});

  PM empty;
  CHECK(solve_subsets(empty.plus, empty.minus).k_min == 0);
}

TEST_CASE("oracle rejects oversized instances") {
  PM pm = testkit::random_pm(3, 7, 6, 10);
  CHECK_THROWS_AS(solve_subsets(pm.plus, pm.minus), InstanceTooLargeError);
  CHECK_NOTHROW(solve_subsets(pm.plus, pm.minus, 13));
}

TEST_CASE("oracle skips infeasible smaller-id sets") {
  // removing one of the coincident plus points (ids 0, 1) never helps;
  // the first feasible singleton is the minus point
  PM pm = make_pm({{0, 0}, {0, 0}}, {{0, 0}});
  SeparatorSolution s = solve_subsets(pm.plus, pm.minus);
  CHECK(s.k_min == 1);
  CHECK(s.removed_ids == std::vector<int>{2});
}

TEST_CASE("naive solver matches the oracle on random small instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    PM pm = testkit::random_pm(seed, 1 + seed % 5, 1 + (seed / 5) % 5, 4);
    SeparatorSolution fast = solve_naive(pm.plus, pm.minus);
    SeparatorSolution slow = solve_subsets(pm.plus, pm.minus);
    CAPTURE(seed);
    REQUIRE(fast.k_min == slow.k_min);
  }
}

TEST_CASE("coincident opposite-sign pairs each cost one") {
  PM pm = make_pm({{0, 0}, {5, 5}}, {{0, 0}, {5, 5}});
  CHECK(solve_subsets(pm.plus, pm.minus).k_min == 2);
  CHECK(solve_naive(pm.plus, pm.minus).k_min == 2);
}
