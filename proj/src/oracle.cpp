#include "hullsep/oracle.hpp"

#include <algorithm>

#include "hullsep/errors.hpp"
#include "hullsep/hull.hpp"

namespace hullsep {

SeparatorSolution solve_subsets(const std::vector<Point>& plus,
                                const std::vector<Point>& minus, int limit) {
  const int n = static_cast<int>(plus.size() + minus.size());
  if (n > limit)
    throw InstanceTooLargeError("instance has " + std::to_string(n) +
                                " points, oracle limit is " +
                                std::to_string(limit));

  std::vector<int> ids;
  ids.reserve(n);
  for (const Point& p : plus) ids.push_back(p.id);
  for (const Point& p : minus) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());

  auto feasible = [&](const std::vector<int>& removed) {
    auto kept = [&removed](const std::vector<Point>& pts) {
      std::vector<Point> out;
      for (const Point& p : pts)
        if (!std::binary_search(removed.begin(), removed.end(), p.id))
          out.push_back(p);
      return out;
    };
    Hull hp = convex_hull(kept(plus));
    Hull hm = convex_hull(kept(minus));
    return hulls_disjoint_bruteforce(hp, hm) == Disjointness::Disjoint;
  };

  // Index combinations in lexicographic order; since `ids` is sorted this
  // yields removal id sets in lexicographic order too.
  std::vector<int> pick;
  for (int k = 0; k <= n; ++k) {
    pick.assign(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<int> removed;
      removed.reserve(k);
      for (int i : pick) removed.push_back(ids[i]);
      if (feasible(removed))
        return finalize_solution(plus, minus, std::move(removed));
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error("internal: exhaustive search found no feasible removal set");
}

}  // namespace hullsep
