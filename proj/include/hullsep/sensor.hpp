#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hullsep/separator.hpp"

namespace hullsep {

enum class SolverAlgo { Naive, Dual };

// A binary sensor field watching a moving target: sensor S should report +1
// when (S - target) . direction > 0 and -1 when < 0 (sensors on the boundary
// line are resampled away). flipped_ids lists the faulty sensors whose
// reports were inverted; the signs stored in `sensors` are the reported ones.
struct Scenario {
  std::vector<Point> sensors;  // ids 0..n-1, signs as reported
  Point target;
  Rat dir_x;
  Rat dir_y;
  std::vector<int> flipped_ids;  // sorted ascending
  std::uint64_t seed = 0;
};

// Deterministic generator: n sensors at integer coordinates in a fixed
// window, k distinct faulty sensors. Throws InvalidParamsError when k > n or
// either is negative.
Scenario generate_scenario(int n, int k, std::uint64_t seed);

struct IdentifyMetrics {
  int k_min = 0;        // optimum reported by the solver
  int num_flipped = 0;  // |flipped_ids| in the scenario
  double precision = 1.0;  // |reported ∩ flipped| / |reported|
  double recall = 1.0;     // |reported ∩ flipped| / |flipped|
};

// Runs the chosen separator on the reported signs. The returned removal set
// is the claimed faulty set; k_min never exceeds the true fault count since
// flipping the true faults back restores half-plane-consistent labels.
std::pair<SeparatorSolution, IdentifyMetrics> identify_faulty(
    const Scenario& sc, SolverAlgo algo);

// Sidecar JSON with the ground truth: target, direction, flipped_ids, seed.
std::string scenario_sidecar_json(const Scenario& sc, bool pretty = true);

// Reported-sign instance text for the scenario, in the instance file format.
std::string scenario_instance_text(const Scenario& sc);

}  // namespace hullsep
