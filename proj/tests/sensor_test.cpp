#include "hullsep/sensor.hpp"

#include "doctest.h"

#include "hullsep/errors.hpp"
#include "hullsep/hull.hpp"
#include "hullsep/io.hpp"

using namespace hullsep;

namespace {

Rat boundary_dot(const Scenario& sc, const Point& s) {
  return (s.x - sc.target.x) * sc.dir_x + (s.y - sc.target.y) * sc.dir_y;
}

// Reported signs with the ground-truth faults undone.
std::vector<Point> unflipped(const Scenario& sc) {
  std::vector<Point> out = sc.sensors;
  for (int id : sc.flipped_ids) out[id].sign = flipped(out[id].sign);
  return out;
}

}  // namespace

TEST_CASE("scenario generation is deterministic in the seed") {
  Scenario a = generate_scenario(25, 4, 11);
  Scenario b = generate_scenario(25, 4, 11);
  REQUIRE(a.sensors.size() == 25);
  CHECK(a.flipped_ids == b.flipped_ids);
  CHECK(same_coords(a.target, b.target));
  CHECK(a.dir_x == b.dir_x);
  CHECK(a.dir_y == b.dir_y);
  for (size_t i = 0; i < a.sensors.size(); ++i) {
    CHECK(same_coords(a.sensors[i], b.sensors[i]));
    CHECK(a.sensors[i].sign == b.sensors[i].sign);
  }
  Scenario c = generate_scenario(25, 4, 12);
  bool differs = false;
  for (size_t i = 0; i < a.sensors.size(); ++i)
    differs = differs || !same_coords(a.sensors[i], c.sensors[i]);
  CHECK(differs);
}

TEST_CASE("scenario generation validates parameters") {
  CHECK_THROWS_AS(generate_scenario(3, 4, 1), InvalidParamsError);
  CHECK_THROWS_AS(generate_scenario(-1, 0, 1), InvalidParamsError);
  CHECK_THROWS_AS(generate_scenario(5, -1, 1), InvalidParamsError);
  Scenario all_bad = generate_scenario(4, 4, 1);
  CHECK(all_bad.flipped_ids.size() == 4);
  Scenario empty = generate_scenario(0, 0, 1);
  CHECK(empty.sensors.empty());
  CHECK(empty.flipped_ids.empty());
}

TEST_CASE("sensor signs follow the motion half-plane rule") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    Scenario sc = generate_scenario(30, 6, seed);
    REQUIRE(sc.flipped_ids.size() == 6);
    CHECK((sc.dir_x != 0 || sc.dir_y != 0));
    std::vector<bool> is_flipped(sc.sensors.size(), false);
    for (int id : sc.flipped_ids) {
      REQUIRE(id >= 0);
      REQUIRE(id < (int)sc.sensors.size());
      CHECK_FALSE(is_flipped[id]);  // distinct faults
      is_flipped[id] = true;
    }
    for (const Point& s : sc.sensors) {
      Rat dot = boundary_dot(sc, s);
      CHECK(dot != 0);  // boundary sensors were resampled away
      PointSign honest = dot > 0 ? PointSign::Plus : PointSign::Minus;
      if (is_flipped[s.id])
        CHECK(s.sign == flipped(honest));
      else
        CHECK(s.sign == honest);
    }
  }
}

TEST_CASE("pre-flip classes are separable with the target outside") {
  for (std::uint64_t seed : {3, 9, 27}) {
    Scenario sc = generate_scenario(40, 5, seed);
    std::vector<Point> honest = unflipped(sc);
    std::vector<Point> plus, minus;
    for (const Point& p : honest)
      (p.sign == PointSign::Plus ? plus : minus).push_back(p);
    Hull hp = convex_hull(plus), hm = convex_hull(minus);
    CHECK(hulls_disjoint(hp, hm) == Disjointness::Disjoint);
    CHECK(hulls_disjoint_bruteforce(hp, hm) == Disjointness::Disjoint);
    CHECK(point_in_convex_polygon(hp, sc.target) == Containment::Outside);
    CHECK(point_in_convex_polygon(hm, sc.target) == Containment::Outside);
  }
}

TEST_CASE("identify_faulty never needs more repairs than there were faults") {
  for (std::uint64_t seed : {2, 5, 8, 13}) {
    Scenario sc = generate_scenario(24, 3, seed);
    for (SolverAlgo algo : {SolverAlgo::Naive, SolverAlgo::Dual}) {
      auto [sol, m] = identify_faulty(sc, algo);
      CHECK(m.k_min == sol.k_min);
      CHECK(m.num_flipped == 3);
      CHECK(sol.k_min <= 3);
      CHECK(m.precision >= 0.0);
      CHECK(m.precision <= 1.0);
      CHECK(m.recall >= 0.0);
      CHECK(m.recall <= 1.0);
      // Both ratios count the same hit set.
      int hits = 0;
      for (int id : sol.removed_ids)
        for (int f : sc.flipped_ids) hits += id == f;
      if (!sol.removed_ids.empty())
        CHECK(m.precision ==
              doctest::Approx((double)hits / sol.removed_ids.size()));
      CHECK(m.recall == doctest::Approx(hits / 3.0));
    }
  }
}

TEST_CASE("negating the motion direction swaps classes but not the optimum") {
  Scenario sc = generate_scenario(30, 4, 17);
  auto [sol, m] = identify_faulty(sc, SolverAlgo::Dual);
  Scenario neg = sc;
  neg.dir_x = -neg.dir_x;
  neg.dir_y = -neg.dir_y;
  for (Point& p : neg.sensors) p.sign = flipped(p.sign);
  auto [nsol, nm] = identify_faulty(neg, SolverAlgo::Dual);
  CHECK(nsol.k_min == sol.k_min);
}

TEST_CASE("faulty sensor regression n=60 k=5 seed=7") {
  Scenario sc = generate_scenario(60, 5, 7);
  auto [sol, m] = identify_faulty(sc, SolverAlgo::Dual);
  CHECK(sol.k_min == 5);  // both certified solvers agreed on this optimum
  CHECK(sol.removed_ids == std::vector<int>{6, 16, 20, 25, 30});
  CHECK(sol.removed_ids == sc.flipped_ids);
  CHECK(m.precision == doctest::Approx(1.0));
  CHECK(m.recall == doctest::Approx(1.0));
}

TEST_CASE("scenario artifacts serialize consistently") {
  Scenario sc = generate_scenario(12, 2, 21);
  std::string sidecar = scenario_sidecar_json(sc);
  CHECK(sidecar.find("\"flipped_ids\"") != std::string::npos);
  CHECK(sidecar.find("\"seed\": 21") != std::string::npos);
  CHECK(sidecar.find("\"direction\"") != std::string::npos);

  Instance back = parse_instance(scenario_instance_text(sc));
  REQUIRE(back.points.size() == sc.sensors.size());
  for (size_t i = 0; i < back.points.size(); ++i) {
    CHECK(same_coords(back.points[i], sc.sensors[i]));
    CHECK(back.points[i].sign == sc.sensors[i].sign);
    CHECK(back.points[i].id == sc.sensors[i].id);
  }
}
