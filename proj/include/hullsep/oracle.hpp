#pragma once

#include <vector>

#include "hullsep/geometry.hpp"
#include "hullsep/separator.hpp"

namespace hullsep {

inline constexpr int kOracleMaxPoints = 12;

// Exhaustive reference solver: tries removal sets by increasing size,
// lexicographically within a size, and returns the first one whose kept
// hulls are disjoint (checked pairwise, without separating-axis machinery).
// Throws InstanceTooLargeError when the instance exceeds `limit` points.
SeparatorSolution solve_subsets(const std::vector<Point>& plus,
                                const std::vector<Point>& minus,
                                int limit = kOracleMaxPoints);

}  // namespace hullsep
