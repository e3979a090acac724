#include "hullsep/separator.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "hullsep/errors.hpp"

namespace hullsep {

namespace {

// Position along a line: x for non-vertical lines, y for vertical ones.
Rat along_line(const Line& l, const Point& p) {
  return l.vertical() ? p.y : p.x;
}

}  // namespace

SideCounts side_counts(const std::vector<Point>& plus,
                       const std::vector<Point>& minus, const Line& l) {
  SideCounts sc;
  std::vector<std::pair<Rat, int>> on;
  auto tally = [&](const std::vector<Point>& pts, bool is_plus) {
    for (const Point& p : pts) {
      switch (side_of_line(l, p)) {
        case LineSide::Above:
          (is_plus ? sc.plus_above : sc.minus_above)++;
          break;
        case LineSide::Below:
          (is_plus ? sc.plus_below : sc.minus_below)++;
          break;
        case LineSide::On:
          (is_plus ? sc.plus_on : sc.minus_on)++;
          on.emplace_back(along_line(l, p), p.id);
          break;
      }
    }
  };
  tally(plus, true);
  tally(minus, false);
  std::sort(on.begin(), on.end());
  sc.on_line_ids.reserve(on.size());
  for (auto& [t, id] : on) sc.on_line_ids.push_back(id);
  return sc;
}

LineCost cost_of_line(const std::vector<Point>& plus,
                      const std::vector<Point>& minus, const Line& l) {
  SideCounts sc = side_counts(plus, minus, l);
  if (sc.plus_on + sc.minus_on > 0)
    throw PointOnLineError("input point lies on the queried line");
  int cost_above = sc.plus_below + sc.minus_above;
  int cost_below = sc.plus_above + sc.minus_below;
  LineCost lc;
  lc.orientation = cost_above <= cost_below ? PlusOrientation::PlusAbove
                                            : PlusOrientation::PlusBelow;
  lc.cost = std::min(cost_above, cost_below);
  LineSide plus_side = lc.orientation == PlusOrientation::PlusAbove
                           ? LineSide::Above
                           : LineSide::Below;
  for (const Point& p : plus)
    if (side_of_line(l, p) != plus_side) lc.removed_ids.push_back(p.id);
  for (const Point& p : minus)
    if (side_of_line(l, p) == plus_side) lc.removed_ids.push_back(p.id);
  std::sort(lc.removed_ids.begin(), lc.removed_ids.end());
  return lc;
}

namespace {

std::vector<Point> kept_points(const std::vector<Point>& pts,
                               const std::vector<int>& removed_sorted) {
  std::vector<Point> out;
  for (const Point& p : pts)
    if (!std::binary_search(removed_sorted.begin(), removed_sorted.end(),
                            p.id))
      out.push_back(p);
  return out;
}

}  // namespace

SeparatorSolution solution_with_witness(const std::vector<Point>& plus,
                                        const std::vector<Point>& minus,
                                        std::vector<int> removed_ids,
                                        const Line& line) {
  std::sort(removed_ids.begin(), removed_ids.end());
  std::vector<Point> kept_plus = kept_points(plus, removed_ids);
  std::vector<Point> kept_minus = kept_points(minus, removed_ids);
  if (hulls_disjoint(convex_hull(kept_plus), convex_hull(kept_minus)) !=
      Disjointness::Disjoint)
    throw Error("internal: removal set does not yield disjoint hulls");

  SeparatorSolution sol;
  sol.line = line;
  sol.k_min = static_cast<int>(removed_ids.size());
  sol.removed_ids = std::move(removed_ids);

  LineSide plus_side = LineSide::Above;
  if (!kept_plus.empty()) {
    plus_side = side_of_line(sol.line, kept_plus[0]);
  } else if (!kept_minus.empty()) {
    plus_side = opposite(side_of_line(sol.line, kept_minus[0]));
  }
  if (plus_side == LineSide::On)
    throw Error("internal: witness line touches a kept point");
  sol.orientation = plus_side == LineSide::Above ? PlusOrientation::PlusAbove
                                                 : PlusOrientation::PlusBelow;
  for (const Point& p : kept_plus)
    if (side_of_line(sol.line, p) != plus_side)
      throw Error("internal: witness line is not strictly separating");
  for (const Point& p : kept_minus)
    if (side_of_line(sol.line, p) != opposite(plus_side))
      throw Error("internal: witness line is not strictly separating");
  return sol;
}

SeparatorSolution finalize_solution(const std::vector<Point>& plus,
                                    const std::vector<Point>& minus,
                                    std::vector<int> removed_ids) {
  std::sort(removed_ids.begin(), removed_ids.end());
  Hull hp = convex_hull(kept_points(plus, removed_ids));
  Hull hm = convex_hull(kept_points(minus, removed_ids));
  if (hulls_disjoint(hp, hm) != Disjointness::Disjoint)
    throw Error("internal: removal set does not yield disjoint hulls");
  return solution_with_witness(plus, minus, std::move(removed_ids),
                               separating_line(hp, hm));
}

namespace {

// Integer form of a point for fast repeated line-sign evaluation:
// sign(a*x + b*y - c) == sign(a*X + b*Y - c*D).
struct EvalPoint {
  Int X, Y, D;
  int id = -1;
  bool is_plus = false;
  const Point* p = nullptr;
};

std::vector<EvalPoint> prep_points(const std::vector<Point>& plus,
                                   const std::vector<Point>& minus) {
  std::vector<EvalPoint> all;
  all.reserve(plus.size() + minus.size());
  auto add = [&all](const std::vector<Point>& pts, bool is_plus) {
    for (const Point& p : pts) {
      EvalPoint e;
      e.X = num(p.x) * den(p.y);
      e.Y = num(p.y) * den(p.x);
      e.D = den(p.x) * den(p.y);
      e.id = p.id;
      e.is_plus = is_plus;
      e.p = &p;
      all.push_back(std::move(e));
    }
  };
  add(plus, true);
  add(minus, false);
  return all;
}

std::vector<int> smaller_id_class(const std::vector<Point>& plus,
                                  const std::vector<Point>& minus) {
  std::vector<int> pids, mids;
  for (const Point& p : plus) pids.push_back(p.id);
  for (const Point& p : minus) mids.push_back(p.id);
  std::sort(pids.begin(), pids.end());
  std::sort(mids.begin(), mids.end());
  if (pids.size() != mids.size())
    return pids.size() < mids.size() ? pids : mids;
  return pids < mids ? pids : mids;
}

}  // namespace

SeparatorSolution solve_naive(const std::vector<Point>& plus,
                              const std::vector<Point>& minus) {
  if (plus.empty() || minus.empty())
    return finalize_solution(plus, minus, {});

  std::vector<EvalPoint> all = prep_points(plus, minus);
  const int n = static_cast<int>(all.size());

  bool all_coincident = true;
  for (int i = 1; i < n && all_coincident; ++i)
    all_coincident = same_coords(*all[0].p, *all[i].p);
  if (all_coincident) {
    // No line can keep a plus and a minus; drop the smaller class.
    return finalize_solution(plus, minus, smaller_id_class(plus, minus));
  }

  int best_cost = std::numeric_limits<int>::max();
  std::vector<int> best_ids;

  std::vector<int> raw_sign(n);          // -1/0/+1 per point for current line
  std::vector<int> on_points;            // indices into all, current line
  std::vector<int> group_of(n);          // position group per on-line point
  std::vector<std::pair<Rat, int>> pos;  // (along-line position, index)
  std::vector<int> cand;                 // scratch removal ids

  // Assemble the removal set for a resolved candidate and fold it into the
  // running best. keep_sign: raw sign kept plus points must have; split/x:
  // on-line groups before split get sign x, the rest -x.
  auto consider = [&](int cost, int keep_sign, int split, int x) {
    if (cost > best_cost) return;
    cand.clear();
    for (int i = 0; i < n; ++i) {
      int s = raw_sign[i];
      if (s == 0) s = group_of[i] < split ? x : -x;
      bool wrong = all[i].is_plus ? s != keep_sign : s == keep_sign;
      if (wrong) cand.push_back(all[i].id);
    }
    std::sort(cand.begin(), cand.end());
    if (cost < best_cost || cand < best_ids) {
      best_cost = cost;
      best_ids = cand;
    }
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (same_coords(*all[i].p, *all[j].p)) continue;
      Line l = Line::through(*all[i].p, *all[j].p);

      int plus_pos = 0, plus_neg = 0, minus_pos = 0, minus_neg = 0;
      on_points.clear();
      for (int t = 0; t < n; ++t) {
        Int v = l.a * all[t].X + l.b * all[t].Y - l.c * all[t].D;
        int s = sign_of(v);
        raw_sign[t] = s;
        if (s > 0) {
          (all[t].is_plus ? plus_pos : minus_pos)++;
        } else if (s < 0) {
          (all[t].is_plus ? plus_neg : minus_neg)++;
        } else {
          on_points.push_back(t);
        }
      }

      // Group on-line points by exact position; coincident points can never
      // be split by a perturbation of this line.
      pos.clear();
      for (int t : on_points) pos.emplace_back(along_line(l, *all[t].p), t);
      std::sort(pos.begin(), pos.end());
      int groups = 0;
      for (size_t k = 0; k < pos.size(); ++k) {
        if (k > 0 && pos[k].first != pos[k - 1].first) ++groups;
        group_of[pos[k].second] = groups;
      }
      ++groups;

      // Prefix counts of on-line plus/minus over the first `g` groups.
      std::vector<int> pre_p(groups + 1, 0), pre_m(groups + 1, 0);
      for (int t : on_points)
        (all[t].is_plus ? pre_p : pre_m)[group_of[t] + 1]++;
      for (int g = 1; g <= groups; ++g) {
        pre_p[g] += pre_p[g - 1];
        pre_m[g] += pre_m[g - 1];
      }
      int on_p = pre_p[groups];
      int on_m = pre_m[groups];

      for (int split = 0; split <= groups; ++split) {
        for (int x : {+1, -1}) {
          int add_p_pos = x > 0 ? pre_p[split] : on_p - pre_p[split];
          int add_m_pos = x > 0 ? pre_m[split] : on_m - pre_m[split];
          int pp = plus_pos + add_p_pos;
          int pn = plus_neg + (on_p - add_p_pos);
          int mp = minus_pos + add_m_pos;
          int mn = minus_neg + (on_m - add_m_pos);
          consider(pn + mp, +1, split, x);  // keep plus on positive side
          consider(pp + mn, -1, split, x);  // keep plus on negative side
        }
      }
    }
  }

  return finalize_solution(plus, minus, std::move(best_ids));
}

SeparatorSolution flip_solution(const std::vector<Point>& plus,
                                const std::vector<Point>& minus,
                                const SeparatorSolution& removal) {
  std::vector<int> removed = removal.removed_ids;
  std::sort(removed.begin(), removed.end());
  std::vector<Point> kept_plus = kept_points(plus, removed);
  std::vector<Point> kept_minus = kept_points(minus, removed);
  std::vector<Point> post_plus = kept_plus;
  std::vector<Point> post_minus = kept_minus;
  for (const Point& p : plus)
    if (std::binary_search(removed.begin(), removed.end(), p.id)) {
      Point q = p;
      q.sign = flipped(q.sign);
      post_minus.push_back(q);
    }
  for (const Point& p : minus)
    if (std::binary_search(removed.begin(), removed.end(), p.id)) {
      Point q = p;
      q.sign = flipped(q.sign);
      post_plus.push_back(q);
    }

  // Witness axis and the open threshold interval that keeps the kept hulls
  // strictly apart. A minimal removal set forces every removed point onto its
  // flipped side of any point-avoiding line in that family.
  Hull hp = convex_hull(kept_plus);
  Hull hm = convex_hull(kept_minus);
  Rat ax(0), ay(1);
  bool has_low = false;
  Rat low(0), high(0);
  if (hp.empty() && hm.empty()) {
    high = 1;  // only reachable for the empty instance
  } else if (hp.empty() || hm.empty()) {
    const Hull& h = hp.empty() ? hm : hp;
    high = h.vertices[0].y;
    for (const Point& p : h.vertices) high = std::min(high, p.y);
  } else {
    auto gap = separating_gap(hp, hm);
    if (!gap) throw Error("flip_solution requires a valid removal solution");
    ax = gap->ax;
    ay = gap->ay;
    has_low = true;
    low = gap->low_max;
    high = gap->high_min;
  }

  // Threshold strictly inside the interval and distinct from every point's
  // projection, so no post-flip point lands on the line.
  std::vector<Rat> vals;
  auto project = [&](const std::vector<Point>& pts) {
    for (const Point& p : pts) {
      Rat v = ax * p.x + ay * p.y;
      if ((!has_low || v > low) && v < high) vals.push_back(v);
    }
  };
  project(plus);
  project(minus);
  Rat t;
  if (has_low) {
    Rat next = high;
    for (const Rat& v : vals) next = std::min(next, v);
    t = (low + next) / 2;
  } else {
    if (vals.empty()) {
      t = high - 1;
    } else {
      Rat prev = vals[0];
      for (const Rat& v : vals) prev = std::max(prev, v);
      t = (prev + high) / 2;
    }
  }

  Line l = Line::from_coefficients(ax, ay, t);
  SeparatorSolution sol = solution_with_witness(post_plus, post_minus, {}, l);
  sol.k_min = static_cast<int>(removed.size());
  sol.removed_ids = std::move(removed);
  return sol;
}

}  // namespace hullsep
