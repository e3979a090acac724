#include "hullsep/hull.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "hullsep/errors.hpp"

namespace hullsep {

Hull convex_hull(std::span<const Point> pts) {
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end(), same_coords),
               sorted.end());

  Hull h;
  if (sorted.size() <= 2) {
    h.vertices = std::move(sorted);
    return h;
  }

  // Monotone chain; strict turns only, so collinear points are dropped.
  std::vector<Point> hull;
  hull.reserve(2 * sorted.size());
  auto build = [&hull](const Point& p, size_t floor) {
    while (hull.size() > floor + 1 &&
           orientation(hull[hull.size() - 2], hull.back(), p) != Turn::Left) {
      hull.pop_back();
    }
    hull.push_back(p);
  };
  for (const Point& p : sorted) build(p, 0);
  size_t lower = hull.size();
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it)
    build(*it, lower - 1);
  hull.pop_back();  // closes back at sorted[0]

  h.vertices = std::move(hull);
  return h;
}

namespace {

// Is p within the closed bounding box of segment [a,b]? Only meaningful when
// p is collinear with a,b.
bool within_segment_box(const Point& a, const Point& b, const Point& p) {
  const Rat& lox = a.x < b.x ? a.x : b.x;
  const Rat& hix = a.x < b.x ? b.x : a.x;
  const Rat& loy = a.y < b.y ? a.y : b.y;
  const Rat& hiy = a.y < b.y ? b.y : a.y;
  return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

}  // namespace

Containment point_in_convex_polygon(const Hull& h, const Point& p) {
  const auto& v = h.vertices;
  if (v.empty()) return Containment::Outside;
  if (v.size() == 1) {
    return same_coords(v[0], p) ? Containment::OnBoundary
                                : Containment::Outside;
  }
  if (v.size() == 2) {
    if (orientation(v[0], v[1], p) == Turn::Collinear &&
        within_segment_box(v[0], v[1], p)) {
      return Containment::OnBoundary;
    }
    return Containment::Outside;
  }
  bool on_edge = false;
  for (size_t i = 0; i < v.size(); ++i) {
    Turn t = orientation(v[i], v[(i + 1) % v.size()], p);
    if (t == Turn::Right) return Containment::Outside;
    if (t == Turn::Collinear) on_edge = true;
  }
  // Left of every edge except a collinear one: for a convex CCW polygon the
  // edge line meets the polygon exactly in the edge segment.
  return on_edge ? Containment::OnBoundary : Containment::Inside;
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2) {
  Turn o1 = orientation(p1, p2, q1);
  Turn o2 = orientation(p1, p2, q2);
  Turn o3 = orientation(q1, q2, p1);
  Turn o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4 && o1 != Turn::Collinear && o2 != Turn::Collinear &&
      o3 != Turn::Collinear && o4 != Turn::Collinear) {
    return true;
  }
  if (o1 == Turn::Collinear && within_segment_box(p1, p2, q1)) return true;
  if (o2 == Turn::Collinear && within_segment_box(p1, p2, q2)) return true;
  if (o3 == Turn::Collinear && within_segment_box(q1, q2, p1)) return true;
  if (o4 == Turn::Collinear && within_segment_box(q1, q2, p2)) return true;
  return false;
}

namespace {

struct Axis {
  Rat x;
  Rat y;
};

std::vector<Axis> candidate_axes(const Hull& h1, const Hull& h2) {
  std::vector<Axis> axes;
  auto add_hull_axes = [&axes](const Hull& h) {
    const auto& v = h.vertices;
    if (v.size() < 2) return;
    size_t edges = v.size() == 2 ? 1 : v.size();
    for (size_t i = 0; i < edges; ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % v.size()];
      Rat dx = b.x - a.x;
      Rat dy = b.y - a.y;
      axes.push_back({dy, -dx});  // edge normal
      if (v.size() == 2) axes.push_back({dx, dy});  // collinear segment case
    }
  };
  add_hull_axes(h1);
  add_hull_axes(h2);
  if (h1.size() == 1 && h2.size() == 1) {
    Rat dx = h2.vertices[0].x - h1.vertices[0].x;
    Rat dy = h2.vertices[0].y - h1.vertices[0].y;
    if (dx != 0 || dy != 0) axes.push_back({dx, dy});
  }
  return axes;
}

struct Separation {
  Axis axis;
  Rat low_max;   // max projection of the low-side hull
  Rat high_min;  // min projection of the high-side hull
  bool h1_low;
};

std::pair<Rat, Rat> project(const Hull& h, const Axis& d) {
  Rat lo = d.x * h.vertices[0].x + d.y * h.vertices[0].y;
  Rat hi = lo;
  for (size_t i = 1; i < h.vertices.size(); ++i) {
    Rat v = d.x * h.vertices[i].x + d.y * h.vertices[i].y;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

std::optional<Separation> find_separation(const Hull& h1, const Hull& h2) {
  for (const Axis& d : candidate_axes(h1, h2)) {
    auto [lo1, hi1] = project(h1, d);
    auto [lo2, hi2] = project(h2, d);
    if (hi1 < lo2) return Separation{d, hi1, lo2, true};
    if (hi2 < lo1) return Separation{d, hi2, lo1, false};
  }
  return std::nullopt;
}

}  // namespace

Disjointness hulls_disjoint(const Hull& h1, const Hull& h2) {
  if (h1.empty() || h2.empty()) return Disjointness::Disjoint;
  return find_separation(h1, h2) ? Disjointness::Disjoint
                                 : Disjointness::Intersecting;
}

Disjointness hulls_disjoint_bruteforce(const Hull& h1, const Hull& h2) {
  if (h1.empty() || h2.empty()) return Disjointness::Disjoint;
  auto segments = [](const Hull& h) {
    std::vector<std::pair<Point, Point>> segs;
    const auto& v = h.vertices;
    if (v.size() == 2) {
      segs.emplace_back(v[0], v[1]);
    } else if (v.size() >= 3) {
      for (size_t i = 0; i < v.size(); ++i)
        segs.emplace_back(v[i], v[(i + 1) % v.size()]);
    }
    return segs;
  };
  for (const auto& s1 : segments(h1))
    for (const auto& s2 : segments(h2))
      if (segments_intersect(s1.first, s1.second, s2.first, s2.second))
        return Disjointness::Intersecting;
  for (const Point& p : h1.vertices)
    if (point_in_convex_polygon(h2, p) != Containment::Outside)
      return Disjointness::Intersecting;
  for (const Point& p : h2.vertices)
    if (point_in_convex_polygon(h1, p) != Containment::Outside)
      return Disjointness::Intersecting;
  return Disjointness::Disjoint;
}

std::optional<SeparatingGap> separating_gap(const Hull& h1, const Hull& h2) {
  if (h1.empty() || h2.empty()) return std::nullopt;
  auto sep = find_separation(h1, h2);
  if (!sep) return std::nullopt;
  return SeparatingGap{sep->axis.x, sep->axis.y, sep->low_max, sep->high_min,
                       sep->h1_low};
}

Line separating_line(const Hull& h1, const Hull& h2) {
  if (h1.empty() && h2.empty()) {
    return Line::from_coefficients(Rat(0), Rat(1), Rat(0));
  }
  if (h1.empty() || h2.empty()) {
    // Horizontal line strictly below the nonempty hull.
    const Hull& h = h1.empty() ? h2 : h1;
    Rat min_y = h.vertices[0].y;
    for (const Point& p : h.vertices)
      if (p.y < min_y) min_y = p.y;
    return Line::from_coefficients(Rat(0), Rat(1), min_y - 1);
  }
  auto gap = separating_gap(h1, h2);
  if (!gap) throw Error("separating_line requires disjoint hulls");
  Rat mid = (gap->low_max + gap->high_min) / 2;
  return Line::from_coefficients(gap->ax, gap->ay, mid);
}

}  // namespace hullsep
