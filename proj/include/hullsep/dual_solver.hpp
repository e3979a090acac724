#pragma once

#include <vector>

#include "hullsep/geometry.hpp"
#include "hullsep/separator.hpp"

namespace hullsep {

// Quadratic-time solver: builds the dual-line arrangement, BFS-propagates
// (w1, w2) cell weights from the upper-envelope cell, and minimizes both
// orientation costs w1+w2 and (m-w1)+(n-w2) over all cells. Agrees with
// solve_naive on k_min.
SeparatorSolution solve_dual(const std::vector<Point>& plus,
                             const std::vector<Point>& minus);

}  // namespace hullsep
