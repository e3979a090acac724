#pragma once

#include <string>
#include <vector>

#include "hullsep/separator.hpp"

namespace hullsep {

// SVG 1.1 snapshot of the instance: one circle glyph per point (plus points
// red, minus points blue), kept-hull outlines, and — when a solution is given
// — dimmed removed points plus a single <line> element for the witness.
// Output is deterministic for identical inputs.
std::string render_primal(const std::vector<Point>& plus,
                          const std::vector<Point>& minus,
                          const SeparatorSolution* sol = nullptr);

// Dual view: one <line> element per point's dual line, circle markers on the
// pairwise dual intersections, and — when a solution with a non-vertical
// witness is given — a square marker at the dual point of the witness line
// (inside the optimal cell). Deterministic for identical inputs.
std::string render_dual(const std::vector<Point>& plus,
                        const std::vector<Point>& minus,
                        const SeparatorSolution* sol = nullptr);

}  // namespace hullsep
