#include "hullsep/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hullsep/errors.hpp"
#include "hullsep/hull.hpp"
#include "hullsep/oracle.hpp"

namespace hullsep {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream os;
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

}  // namespace

VerificationReport verify_solution(const std::vector<Point>& plus,
                                   const std::vector<Point>& minus,
                                   const SeparatorSolution& sol,
                                   bool certify_optimal) {
  VerificationReport report;
  auto add = [&report](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  std::set<int> known_ids;
  for (const Point& p : plus) known_ids.insert(p.id);
  for (const Point& p : minus) known_ids.insert(p.id);

  // removal-count: size matches k_min, ids are distinct instance points.
  {
    std::set<int> removed(sol.removed_ids.begin(), sol.removed_ids.end());
    std::vector<int> unknown;
    for (int id : removed)
      if (!known_ids.count(id)) unknown.push_back(id);
    bool pass = static_cast<int>(sol.removed_ids.size()) == sol.k_min &&
                removed.size() == sol.removed_ids.size() && unknown.empty();
    std::ostringstream os;
    os << "k_min=" << sol.k_min << " |removed_ids|=" << sol.removed_ids.size();
    if (removed.size() != sol.removed_ids.size()) os << " (duplicate ids)";
    if (!unknown.empty()) os << " unknown ids: " << join_ids(unknown);
    add("removal-count", pass, os.str());
  }

  std::vector<int> removed_sorted = sol.removed_ids;
  std::sort(removed_sorted.begin(), removed_sorted.end());
  auto kept = [&removed_sorted](const std::vector<Point>& pts) {
    std::vector<Point> out;
    for (const Point& p : pts)
      if (!std::binary_search(removed_sorted.begin(), removed_sorted.end(),
                              p.id))
        out.push_back(p);
    return out;
  };
  std::vector<Point> kept_plus = kept(plus);
  std::vector<Point> kept_minus = kept(minus);

  // kept-off-line: the witness may touch removed points, never kept ones.
  {
    std::vector<int> on_line;
    for (const Point& p : kept_plus)
      if (side_of_line(sol.line, p) == LineSide::On) on_line.push_back(p.id);
    for (const Point& p : kept_minus)
      if (side_of_line(sol.line, p) == LineSide::On) on_line.push_back(p.id);
    std::sort(on_line.begin(), on_line.end());
    add("kept-off-line", on_line.empty(),
        on_line.empty() ? "no kept point on the witness line"
                        : "kept points on line: " + join_ids(on_line));
  }

  // strict-sides: kept points strictly on the side the orientation claims.
  {
    LineSide plus_side = sol.orientation == PlusOrientation::PlusAbove
                             ? LineSide::Above
                             : LineSide::Below;
    std::vector<int> bad;
    for (const Point& p : kept_plus)
      if (side_of_line(sol.line, p) != plus_side) bad.push_back(p.id);
    for (const Point& p : kept_minus)
      if (side_of_line(sol.line, p) != opposite(plus_side)) bad.push_back(p.id);
    std::sort(bad.begin(), bad.end());
    std::ostringstream os;
    if (bad.empty())
      os << "all kept points strictly sided (" << to_string(sol.orientation)
         << ")";
    else
      os << "wrong-side or on-line kept points: " << join_ids(bad);
    add("strict-sides", bad.empty(), os.str());
  }

  // hull-disjoint: agreement required from both independent tests.
  {
    Hull hp = convex_hull(kept_plus);
    Hull hm = convex_hull(kept_minus);
    bool fast = hulls_disjoint(hp, hm) == Disjointness::Disjoint;
    bool brute = hulls_disjoint_bruteforce(hp, hm) == Disjointness::Disjoint;
    std::ostringstream os;
    os << "separating-axis: " << (fast ? "disjoint" : "intersecting")
       << ", exhaustive: " << (brute ? "disjoint" : "intersecting");
    add("hull-disjoint", fast && brute, os.str());
  }

  // optimality: certify against the exhaustive oracle when it is feasible.
  if (certify_optimal) {
    if (plus.size() + minus.size() > kOracleMaxPoints) {
      add("optimality", true,
          "skipped: instance exceeds the oracle size cap of " +
              std::to_string(kOracleMaxPoints));
    } else {
      SeparatorSolution ref = solve_subsets(plus, minus);
      std::ostringstream os;
      os << "oracle k_min=" << ref.k_min << ", claimed k_min=" << sol.k_min;
      add("optimality", ref.k_min == sol.k_min, os.str());
    }
  }

  report.valid = std::all_of(report.checks.begin(), report.checks.end(),
                             [](const VerificationCheck& c) { return c.pass; });
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["valid"] = report.valid;
  j["checks"] = nlohmann::ordered_json::array();
  for (const VerificationCheck& c : report.checks)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2);
}

}  // namespace hullsep
