#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hullsep/geometry.hpp"

namespace hullsep {

// Convex hull as a counterclockwise vertex cycle starting at the
// lexicographically smallest vertex. 0, 1 and 2 vertex hulls represent the
// empty set, a point and a segment; for size >= 3 the vertices are in strict
// convex position.
struct Hull {
  std::vector<Point> vertices;

  bool empty() const { return vertices.empty(); }
  size_t size() const { return vertices.size(); }
};

// Duplicates and interior/collinear points are dropped. Among coincident
// input points the one with the smallest id survives.
Hull convex_hull(std::span<const Point> pts);

enum class Containment { Inside, OnBoundary, Outside };

// Classification against the closed hull.
Containment point_in_convex_polygon(const Hull& h, const Point& p);

enum class Disjointness { Disjoint, Intersecting };

// Separating-axis test over the edge normals of both hulls, extended with
// segment directions and the point-difference axis so degenerate hulls are
// decided exactly. Touching closed hulls count as Intersecting; an empty
// hull is Disjoint from everything.
Disjointness hulls_disjoint(const Hull& h1, const Hull& h2);

// Independent oracle: exhaustive boundary segment-pair intersection tests
// plus mutual vertex containment checks.
Disjointness hulls_disjoint_bruteforce(const Hull& h1, const Hull& h2);

// Closed-segment intersection, collinear overlaps and endpoint touches
// included.
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2);

// A witness axis for two disjoint nonempty hulls: projections onto (ax, ay)
// leave an open gap (low_max, high_min) between the hulls. h1_low tells which
// hull projects onto the low side.
struct SeparatingGap {
  Rat ax;
  Rat ay;
  Rat low_max;
  Rat high_min;
  bool h1_low;
};

// std::nullopt when the hulls intersect or touch, or when either is empty.
std::optional<SeparatingGap> separating_gap(const Hull& h1, const Hull& h2);

// A line with h1's vertices strictly on one side and h2's strictly on the
// other. Requires hulls_disjoint(h1, h2) == Disjoint; throws Error otherwise.
// Empty hulls impose no constraint.
Line separating_line(const Hull& h1, const Hull& h2);

}  // namespace hullsep
