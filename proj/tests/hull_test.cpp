#include "hullsep/hull.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hullsep/rng.hpp"
#include "testkit.hpp"

using namespace hullsep;
using testkit::pt;
using testkit::ptr;

namespace {

std::vector<Point> shuffled(std::vector<Point> pts, std::uint64_t seed) {
  Rng g = make_rng(seed);
  for (size_t i = pts.size(); i > 1; --i)
    std::swap(pts[i - 1], pts[rng_below(g, i)]);
  return pts;
}

Hull random_hull(Rng& g, int max_pts, long long range) {
  int n = static_cast<int>(rng_below(g, max_pts + 1));
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(
        pt(rng_int(g, -range, range), rng_int(g, -range, range), i));
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("convex hull basics") {
  SUBCASE("interior rational point excluded") {
    std::vector<Point> pts = {pt(0, 0), pt(2, 0), pt(1, 1),
                              ptr(Rat(1), Rat(1, 2))};
    Hull h = convex_hull(pts);
    REQUIRE(h.vertices.size() == 3);
    CHECK(same_coords(h.vertices[0], pt(0, 0)));
    CHECK(same_coords(h.vertices[1], pt(2, 0)));
    CHECK(same_coords(h.vertices[2], pt(1, 1)));
  }
  SUBCASE("singleton") {
    Hull h = convex_hull(std::vector<Point>{pt(3, 4)});
    REQUIRE(h.vertices.size() == 1);
    CHECK(same_coords(h.vertices[0], pt(3, 4)));
  }
  SUBCASE("collinear points give a segment") {
    Hull h = convex_hull(std::vector<Point>{pt(0, 0), pt(1, 0), pt(2, 0)});
    REQUIRE(h.vertices.size() == 2);
    CHECK(same_coords(h.vertices[0], pt(0, 0)));
    CHECK(same_coords(h.vertices[1], pt(2, 0)));
  }
  SUBCASE("duplicates collapse") {
    Hull h = convex_hull(std::vector<Point>{pt(1, 1), pt(1, 1), pt(1, 1)});
    CHECK(h.vertices.size() == 1);
  }
  SUBCASE("empty") { CHECK(convex_hull(std::vector<Point>{}).vertices.empty()); }
}

TEST_CASE("convex hull is idempotent and permutation-invariant") {
  Rng g = make_rng(20260814);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Point> pts;
    int n = static_cast<int>(rng_below(g, 20));
    for (int i = 0; i < n; ++i)
      pts.push_back(pt(rng_int(g, -8, 8), rng_int(g, -8, 8), i));
    Hull h = convex_hull(pts);
    Hull h2 = convex_hull(h.vertices);
    REQUIRE(h.vertices.size() == h2.vertices.size());
    for (size_t i = 0; i < h.vertices.size(); ++i)
      CHECK(same_coords(h.vertices[i], h2.vertices[i]));
    Hull h3 = convex_hull(shuffled(pts, 1000 + iter));
    REQUIRE(h.vertices.size() == h3.vertices.size());
    for (size_t i = 0; i < h.vertices.size(); ++i)
      CHECK(same_coords(h.vertices[i], h3.vertices[i]));
  }
}

TEST_CASE("hull vertices are strictly convex and counterclockwise") {
  Rng g = make_rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    Hull h = random_hull(g, 25, 10);
    size_t n = h.vertices.size();
    if (n < 3) continue;
    for (size_t i = 0; i < n; ++i)
      CHECK(orientation(h.vertices[i], h.vertices[(i + 1) % n],
                        h.vertices[(i + 2) % n]) == Turn::Left);
  }
}

TEST_CASE("point in convex polygon") {
  Hull tri = convex_hull(std::vector<Point>{pt(0, 0), pt(4, 0), pt(0, 4)});
  CHECK(point_in_convex_polygon(tri, pt(1, 1)) == Containment::Inside);
  CHECK(point_in_convex_polygon(tri, pt(2, 0)) == Containment::OnBoundary);
  CHECK(point_in_convex_polygon(tri, pt(5, 5)) == Containment::Outside);
  CHECK(point_in_convex_polygon(tri, pt(0, 0)) == Containment::OnBoundary);
  CHECK(point_in_convex_polygon(tri, pt(2, 2)) == Containment::OnBoundary);
  CHECK(point_in_convex_polygon(tri, ptr(Rat(1, 3), Rat(1, 3))) ==
        Containment::Inside);

  Hull seg = convex_hull(std::vector<Point>{pt(0, 0), pt(2, 2)});
  CHECK(point_in_convex_polygon(seg, pt(1, 1)) == Containment::OnBoundary);
  CHECK(point_in_convex_polygon(seg, pt(3, 3)) == Containment::Outside);
  CHECK(point_in_convex_polygon(seg, pt(1, 0)) == Containment::Outside);

  Hull one = convex_hull(std::vector<Point>{pt(5, 5)});
  CHECK(point_in_convex_polygon(one, pt(5, 5)) == Containment::OnBoundary);
  CHECK(point_in_convex_polygon(one, pt(5, 6)) == Containment::Outside);

  Hull none;
  CHECK(point_in_convex_polygon(none, pt(0, 0)) == Containment::Outside);
}

TEST_CASE("segment intersection") {
  CHECK(segments_intersect(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
  CHECK(!segments_intersect(pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)));
  CHECK(segments_intersect(pt(0, 0), pt(2, 2), pt(1, 1), pt(3, 3)));
  CHECK(segments_intersect(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 5)));
  CHECK(!segments_intersect(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
  // touching endpoint counts
  CHECK(segments_intersect(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 4)));
}

TEST_CASE("hull disjointness: fixed cases") {
  Hull t1 = convex_hull(std::vector<Point>{pt(0, 0), pt(1, 0), pt(0, 1)});
  Hull t2 = convex_hull(std::vector<Point>{pt(3, 0), pt(4, 0), pt(3, 1)});
  CHECK(hulls_disjoint(t1, t2) == Disjointness::Disjoint);
  CHECK(hulls_disjoint_bruteforce(t1, t2) == Disjointness::Disjoint);

  Hull s1 = convex_hull(std::vector<Point>{pt(0, 0), pt(2, 2)});
  Hull s2 = convex_hull(std::vector<Point>{pt(0, 2), pt(2, 0)});
  CHECK(hulls_disjoint(s1, s2) == Disjointness::Intersecting);
  CHECK(hulls_disjoint_bruteforce(s1, s2) == Disjointness::Intersecting);

  // triangles sharing exactly one vertex touch, and touching intersects
  Hull t3 = convex_hull(std::vector<Point>{pt(1, 0), pt(2, 0), pt(2, 1)});
  Hull t4 = convex_hull(std::vector<Point>{pt(1, 0), pt(0, -1), pt(0, -2)});
  CHECK(hulls_disjoint(t3, t4) == Disjointness::Intersecting);
  CHECK(hulls_disjoint_bruteforce(t3, t4) == Disjointness::Intersecting);

  Hull empty;
  CHECK(hulls_disjoint(empty, t1) == Disjointness::Disjoint);
  CHECK(hulls_disjoint(empty, empty) == Disjointness::Disjoint);
  CHECK(hulls_disjoint_bruteforce(empty, t1) == Disjointness::Disjoint);

  Hull p1 = convex_hull(std::vector<Point>{pt(1, 1)});
  Hull p2 = convex_hull(std::vector<Point>{pt(1, 1)});
  CHECK(hulls_disjoint(p1, p2) == Disjointness::Intersecting);
  CHECK(hulls_disjoint_bruteforce(p1, p2) == Disjointness::Intersecting);

  // point strictly inside a triangle: no edge crossings at all
  Hull big = convex_hull(std::vector<Point>{pt(-9, -9), pt(9, -9), pt(0, 9)});
  Hull inner = convex_hull(std::vector<Point>{pt(0, 0)});
  CHECK(hulls_disjoint(big, inner) == Disjointness::Intersecting);
  CHECK(hulls_disjoint_bruteforce(big, inner) == Disjointness::Intersecting);
}

TEST_CASE("hulls_disjoint agrees with brute force on random pairs") {
  Rng g = make_rng(4242);
  int disjoint_seen = 0, intersecting_seen = 0;
  for (int iter = 0; iter < 600; ++iter) {
    Hull a = random_hull(g, 6, 6);
    Hull b = random_hull(g, 6, 6);
    Disjointness fast = hulls_disjoint(a, b);
    Disjointness slow = hulls_disjoint_bruteforce(a, b);
    REQUIRE(fast == slow);
    (fast == Disjointness::Disjoint ? disjoint_seen : intersecting_seen)++;
  }
  // the sample must exercise both outcomes to mean anything
  CHECK(disjoint_seen > 50);
  CHECK(intersecting_seen > 50);
}

TEST_CASE("separating line witness for disjoint hulls") {
  Rng g = make_rng(777);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Hull a = random_hull(g, 6, 8);
    Hull b = random_hull(g, 6, 8);
    if (hulls_disjoint(a, b) != Disjointness::Disjoint) continue;
    if (a.vertices.empty() && b.vertices.empty()) continue;
    Line l = separating_line(a, b);
    LineSide sa = LineSide::On, sb = LineSide::On;
    for (const Point& p : a.vertices) {
      LineSide s = side_of_line(l, p);
      REQUIRE(s != LineSide::On);
      if (sa == LineSide::On) sa = s;
      REQUIRE(s == sa);
    }
    for (const Point& p : b.vertices) {
      LineSide s = side_of_line(l, p);
      REQUIRE(s != LineSide::On);
      if (sb == LineSide::On) sb = s;
      REQUIRE(s == sb);
    }
    if (!a.vertices.empty() && !b.vertices.empty()) REQUIRE(sa != sb);
    ++checked;
  }
  CHECK(checked > 100);
}
