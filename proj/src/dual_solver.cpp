#include "hullsep/dual_solver.hpp"

#include <limits>

#include "hullsep/arrangement.hpp"
#include "hullsep/cell_graph.hpp"
#include "hullsep/errors.hpp"

namespace hullsep {

SeparatorSolution solve_dual(const std::vector<Point>& plus,
                             const std::vector<Point>& minus) {
  if (plus.empty() || minus.empty())
    return finalize_solution(plus, minus, {});

  std::vector<DualLine> duals;
  duals.reserve(plus.size() + minus.size());
  auto add = [&duals](const std::vector<Point>& pts, Color c) {
    for (const Point& p : pts) {
      DualLine d = dual_of_point(p);
      d.color = c;
      duals.push_back(d);
    }
  };
  add(plus, Color::Red);
  add(minus, Color::Blue);

  Arrangement arr = build_arrangement(duals);
  CellGraph g = build_cell_graph(arr);
  propagate_weights(g, upper_envelope_start(arr), arr.total_red);

  const int m = arr.total_red;
  const int n = arr.total_blue;
  int best = std::numeric_limits<int>::max();
  int best_face = -1;
  bool best_plus_above = true;
  for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f) {
    if (!g.is_cell[f]) continue;
    auto [w1, w2] = g.weights[f];
    // w1 reds below the cell = plus points above its primal line; w2 blues
    // above = minus points below. Keeping plus above costs the complements.
    int cost_plus_above = (m - w1) + (n - w2);
    int cost_plus_below = w1 + w2;
    if (cost_plus_above < best) {
      best = cost_plus_above;
      best_face = f;
      best_plus_above = true;
    }
    if (cost_plus_below < best) {
      best = cost_plus_below;
      best_face = f;
      best_plus_above = false;
    }
  }

  Point v = representative_point(arr, best_face);
  Line l = primal_line_of_dual_point(v);
  LineSide plus_side =
      best_plus_above ? LineSide::Above : LineSide::Below;
  std::vector<int> removed;
  for (const Point& p : plus)
    if (side_of_line(l, p) != plus_side) removed.push_back(p.id);
  for (const Point& p : minus)
    if (side_of_line(l, p) == plus_side) removed.push_back(p.id);
  if (static_cast<int>(removed.size()) != best)
    throw InconsistentArrangementError(
        "cell weights disagree with direct side counts");
  return solution_with_witness(plus, minus, std::move(removed), l);
}

}  // namespace hullsep
