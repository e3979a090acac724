#pragma once

#include <vector>

#include "hullsep/geometry.hpp"
#include "hullsep/hull.hpp"

namespace hullsep {

enum class PlusOrientation { PlusAbove, PlusBelow };

inline const char* to_string(PlusOrientation o) {
  return o == PlusOrientation::PlusAbove ? "PlusAbove" : "PlusBelow";
}

struct SeparatorSolution {
  int k_min = 0;
  std::vector<int> removed_ids;  // sorted ascending, |removed_ids| == k_min
  Line line;                     // strictly separating witness for kept points
  PlusOrientation orientation = PlusOrientation::PlusAbove;
};

struct SideCounts {
  int plus_above = 0, plus_below = 0, plus_on = 0;
  int minus_above = 0, minus_below = 0, minus_on = 0;
  std::vector<int> on_line_ids;  // sorted by position along the line
};

SideCounts side_counts(const std::vector<Point>& plus,
                       const std::vector<Point>& minus, const Line& l);

struct LineCost {
  int cost = 0;
  PlusOrientation orientation = PlusOrientation::PlusAbove;
  std::vector<int> removed_ids;  // sorted
};

// min over the two orientations of (wrong-side plus + wrong-side minus),
// ties toward PlusAbove. Throws PointOnLineError if any input point is on l.
LineCost cost_of_line(const std::vector<Point>& plus,
                      const std::vector<Point>& minus, const Line& l);

// Reference cubic solver: enumerates lines through every distinct-coordinate
// point pair together with their strict perturbation resolutions (rotation
// pivot between consecutive distinct on-line positions or beyond the
// extremes, both directions) and returns the global minimum. Ties break to
// the lexicographically smallest sorted removal id vector.
SeparatorSolution solve_naive(const std::vector<Point>& plus,
                              const std::vector<Point>& minus);

// Builds the witness solution for a chosen removal set: hulls of the kept
// points must be disjoint; the line comes from their separating axis.
SeparatorSolution finalize_solution(const std::vector<Point>& plus,
                                    const std::vector<Point>& minus,
                                    std::vector<int> removed_ids);

// As finalize_solution, but with a caller-supplied witness line; the
// orientation is derived from the kept points' (strict) sides. Throws if the
// line does not strictly separate the kept sets.
SeparatorSolution solution_with_witness(const std::vector<Point>& plus,
                                        const std::vector<Point>& minus,
                                        std::vector<int> removed_ids,
                                        const Line& line);

// Recasts an optimal removal solution as a sign-flip solution: the same ids,
// flipped instead of removed, with a witness line that strictly separates the
// post-flip classes. Minimality of the removal set guarantees every kept-set
// separator that avoids all points puts each removed point on its flipped
// side, so such a line always exists. The returned orientation refers to the
// post-flip classes.
SeparatorSolution flip_solution(const std::vector<Point>& plus,
                                const std::vector<Point>& minus,
                                const SeparatorSolution& removal);

}  // namespace hullsep
