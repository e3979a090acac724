#pragma once

#include <string>
#include <vector>

#include "hullsep/separator.hpp"

namespace hullsep {

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  bool valid = false;  // conjunction of every check's pass flag
  std::vector<VerificationCheck> checks;
};

// Independent validation of a claimed solution. Never throws on a failed
// property; every outcome is a report entry. Checks, in order:
//   removal-count   |removed_ids| == k_min, ids distinct and present
//   kept-off-line   no kept point lies on the witness line
//   strict-sides    kept points strictly on their orientation's side
//   hull-disjoint   kept hulls disjoint under both disjointness tests
//   optimality      (only with certify_optimal) k_min matches the exhaustive
//                   oracle; skipped with pass=true beyond the oracle cap
VerificationReport verify_solution(const std::vector<Point>& plus,
                                   const std::vector<Point>& minus,
                                   const SeparatorSolution& sol,
                                   bool certify_optimal = false);

std::string report_to_json(const VerificationReport& report);

}  // namespace hullsep
