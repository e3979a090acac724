#include "hullsep/separator.hpp"

#include <vector>

#include "doctest.h"
#include "hullsep/errors.hpp"
#include "hullsep/hull.hpp"
#include "testkit.hpp"

using namespace hullsep;
using testkit::make_pm;
using testkit::pt;
using testkit::PM;

namespace {

// Independent validity check: removing removed_ids leaves hulls disjoint and
// the witness line strictly sided.
void check_solution(const PM& pm, const SeparatorSolution& sol) {
  REQUIRE(static_cast<int>(sol.removed_ids.size()) == sol.k_min);
  auto removed = [&](int id) {
    for (int r : sol.removed_ids)
      if (r == id) return true;
    return false;
  };
  std::vector<Point> kp, km;
  for (const Point& p : pm.plus)
    if (!removed(p.id)) kp.push_back(p);
  for (const Point& p : pm.minus)
    if (!removed(p.id)) km.push_back(p);
  CHECK(hulls_disjoint_bruteforce(convex_hull(kp), convex_hull(km)) ==
        Disjointness::Disjoint);
  LineSide plus_side = sol.orientation == PlusOrientation::PlusAbove
                           ? LineSide::Above
                           : LineSide::Below;
  for (const Point& p : kp) CHECK(side_of_line(sol.line, p) == plus_side);
  for (const Point& p : km)
    CHECK(side_of_line(sol.line, p) == opposite(plus_side));
}

}  // namespace

TEST_CASE("side_counts tallies strict sides and on-line order") {
  PM pm = make_pm({{0, 0}, {0, 2}, {1, 1}}, {{2, 1}, {0, 5}});
  Line l = Line::from_coefficients(Rat(0), Rat(1), Rat(1));  // y = 1
  SideCounts sc = side_counts(pm.plus, pm.minus, l);
  CHECK(sc.plus_above == 1);
  CHECK(sc.plus_below == 1);
  CHECK(sc.plus_on == 1);
  CHECK(sc.minus_above == 1);
  CHECK(sc.minus_below == 0);
  CHECK(sc.minus_on == 1);
  REQUIRE(sc.on_line_ids.size() == 2);
  // along y=1 the order is by x: (1,1) id 2 before (2,1) id 3
  CHECK(sc.on_line_ids[0] == 2);
  CHECK(sc.on_line_ids[1] == 3);
}

TEST_CASE("cost_of_line worked cases") {
  SUBCASE("already separated") {
    PM pm = make_pm({{0, 0}}, {{0, 2}});
    Line l = Line::from_coefficients(Rat(0), Rat(1), Rat(1));  // y = 1
    LineCost lc = cost_of_line(pm.plus, pm.minus, l);
    CHECK(lc.cost == 0);
    CHECK(lc.orientation == PlusOrientation::PlusBelow);
    CHECK(lc.removed_ids.empty());
  }
  SUBCASE("everything below the line") {
    PM pm = make_pm({{0, 0}, {0, 2}}, {{0, 1}});
    Line l = Line::from_coefficients(Rat(0), Rat(1), Rat(3));  // y = 3
    LineCost lc = cost_of_line(pm.plus, pm.minus, l);
    CHECK(lc.cost == 1);
    CHECK(lc.orientation == PlusOrientation::PlusBelow);
    CHECK(lc.removed_ids == std::vector<int>{2});
  }
  SUBCASE("slanted rational line") {
    PM pm = make_pm({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
    // y = x - 5/2
    Line l = Line::from_coefficients(Rat(-1), Rat(1), Rat(-5, 2));
    LineCost lc = cost_of_line(pm.plus, pm.minus, l);
    CHECK(lc.cost == 1);
    CHECK(lc.orientation == PlusOrientation::PlusAbove);
    CHECK(lc.removed_ids == std::vector<int>{2});
  }
  SUBCASE("point on line throws") {
    PM pm = make_pm({{0, 1}}, {{5, 5}});
    Line l = Line::from_coefficients(Rat(0), Rat(1), Rat(1));
    CHECK_THROWS_AS(cost_of_line(pm.plus, pm.minus, l), PointOnLineError);
  }
}

TEST_CASE("solve_naive fixed instances") {
  SUBCASE("separated clusters") {
    PM pm = make_pm({{0, 0}, {1, 1}}, {{5, 0}, {6, 1}});
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 0);
    check_solution(pm, s);
  }
  SUBCASE("alternating on a line") {
    PM pm = make_pm({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 1);
    check_solution(pm, s);
  }
  SUBCASE("crossing diagonals") {
    PM pm = make_pm({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 1);
    check_solution(pm, s);
  }
  SUBCASE("coincident opposite pair") {
    PM pm = make_pm({{0, 0}}, {{0, 0}});
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 1);
    check_solution(pm, s);
  }
  SUBCASE("empty side") {
    PM pm;
    pm.minus = make_pm({}, {{1, 2}, {3, 4}}).minus;
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 0);
    check_solution(pm, s);
  }
  SUBCASE("both empty") {
    PM pm;
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 0);
  }
  SUBCASE("all points coincident") {
    PM pm = make_pm({{1, 1}, {1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
    SeparatorSolution s = solve_naive(pm.plus, pm.minus);
    CHECK(s.k_min == 2);
    CHECK(s.removed_ids == std::vector<int>{3, 4});
    check_solution(pm, s);
  }
}

TEST_CASE("solve_naive ties break to lexicographically smallest removal set") {
  // symmetric instance: removing either of the two inner points costs 1
  PM pm = make_pm({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
  SeparatorSolution s = solve_naive(pm.plus, pm.minus);
  REQUIRE(s.k_min == 1);
  // candidates would be {1} (drop plus (2,0)) or {2} (drop minus (1,0))
  CHECK(s.removed_ids == std::vector<int>{1});
}

TEST_CASE("solve_naive color swap symmetry") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PM pm = testkit::random_pm(seed, 4, 4, 4);
    SeparatorSolution a = solve_naive(pm.plus, pm.minus);
    SeparatorSolution b = solve_naive(pm.minus, pm.plus);
    CHECK(a.k_min == b.k_min);
  }
}

TEST_CASE("solve_naive monotonicity under adding one point") {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    PM pm = testkit::random_pm(seed, 4, 3, 3);
    SeparatorSolution base = solve_naive(pm.plus, pm.minus);
    PM bigger = pm;
    bigger.minus.push_back(testkit::pt(static_cast<long long>(seed % 5) - 2,
                                       static_cast<long long>(seed % 3) - 1,
                                       7, PointSign::Minus));
    SeparatorSolution more = solve_naive(bigger.plus, bigger.minus);
    CHECK(more.k_min >= base.k_min);
    CHECK(more.k_min <= base.k_min + 1);
  }
}

TEST_CASE("solve_naive affine invariance") {
  PM pm = testkit::random_pm(5, 5, 5, 5);
  int base = solve_naive(pm.plus, pm.minus).k_min;
  // x' = 2x - 3y + 1, y' = x + y - 4  (det = 5, invertible)
  auto map = [](std::vector<Point>& pts) {
    for (Point& p : pts) {
      Rat x = p.x, y = p.y;
      p.x = Rat(2) * x - Rat(3) * y + 1;
      p.y = x + y - 4;
    }
  };
  map(pm.plus);
  map(pm.minus);
  CHECK(solve_naive(pm.plus, pm.minus).k_min == base);
}

namespace {

// Applies the flip set and checks that the post-flip classes are strictly
// separated by the returned witness and have disjoint hulls.
void check_flip(const PM& pm, const SeparatorSolution& flip) {
  REQUIRE(static_cast<int>(flip.removed_ids.size()) == flip.k_min);
  auto in_set = [&](int id) {
    for (int r : flip.removed_ids)
      if (r == id) return true;
    return false;
  };
  std::vector<Point> post_plus, post_minus;
  for (const Point& p : pm.plus)
    (in_set(p.id) ? post_minus : post_plus).push_back(p);
  for (const Point& p : pm.minus)
    (in_set(p.id) ? post_plus : post_minus).push_back(p);
  CHECK(hulls_disjoint_bruteforce(convex_hull(post_plus),
                                  convex_hull(post_minus)) ==
        Disjointness::Disjoint);
  LineSide plus_side = flip.orientation == PlusOrientation::PlusAbove
                           ? LineSide::Above
                           : LineSide::Below;
  for (const Point& p : post_plus)
    CHECK(side_of_line(flip.line, p) == plus_side);
  for (const Point& p : post_minus)
    CHECK(side_of_line(flip.line, p) == opposite(plus_side));
}

}  // namespace

TEST_CASE("flip_solution repairs the same ids it would have removed") {
  PM pm = make_pm({{0, 0}, {2, 0}, {5, 5}}, {{1, 0}, {6, 6}});
  SeparatorSolution removal = solve_naive(pm.plus, pm.minus);
  SeparatorSolution flip = flip_solution(pm.plus, pm.minus, removal);
  CHECK(flip.k_min == removal.k_min);
  CHECK(flip.removed_ids == removal.removed_ids);
  check_flip(pm, flip);
}

TEST_CASE("flip_solution sides every flipped point strictly") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    PM pm = testkit::random_pm(seed, 5, 5, 5);
    SeparatorSolution removal = solve_naive(pm.plus, pm.minus);
    check_flip(pm, flip_solution(pm.plus, pm.minus, removal));
  }
}

TEST_CASE("flip_solution handles one-sided and empty leftovers") {
  // Both plus points sit deep inside a minus square; dropping any single
  // square corner still leaves a triangle touching the plus segment, so the
  // optimum clears the whole plus side and the kept plus hull is empty.
  PM inside = make_pm({{0, 0}, {1, 0}}, {{-5, -5}, {5, -5}, {5, 5}, {-5, 5}});
  SeparatorSolution removal = solve_naive(inside.plus, inside.minus);
  CHECK(removal.k_min == 2);
  CHECK(removal.removed_ids == std::vector<int>{0, 1});
  check_flip(inside, flip_solution(inside.plus, inside.minus, removal));

  PM empty;
  SeparatorSolution none = solve_naive(empty.plus, empty.minus);
  SeparatorSolution flip = flip_solution(empty.plus, empty.minus, none);
  CHECK(flip.k_min == 0);
  CHECK(flip.removed_ids.empty());
}
