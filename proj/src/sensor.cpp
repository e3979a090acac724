#include "hullsep/sensor.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "hullsep/dual_solver.hpp"
#include "hullsep/errors.hpp"
#include "hullsep/io.hpp"
#include "hullsep/rng.hpp"

namespace hullsep {

namespace {

constexpr long kWindow = 50;       // sensor coordinates in [-kWindow, kWindow]
constexpr long kDirRange = 5;      // direction components in [-kDirRange, kDirRange]

}  // namespace

Scenario generate_scenario(int n, int k, std::uint64_t seed) {
  if (n < 0 || k < 0 || k > n)
    throw InvalidParamsError("need 0 <= k <= n for a sensor scenario");
  Rng g = make_rng(seed);
  Scenario sc;
  sc.seed = seed;
  sc.target = Point{Rat(rng_int(g, -kWindow, kWindow)),
                    Rat(rng_int(g, -kWindow, kWindow)), -1, PointSign::Plus};
  do {
    sc.dir_x = Rat(rng_int(g, -kDirRange, kDirRange));
    sc.dir_y = Rat(rng_int(g, -kDirRange, kDirRange));
  } while (sc.dir_x == 0 && sc.dir_y == 0);

  sc.sensors.reserve(n);
  for (int i = 0; i < n; ++i) {
    // Resample sensors on the boundary line through the target.
    Rat x, y, dot;
    do {
      x = Rat(rng_int(g, -kWindow, kWindow));
      y = Rat(rng_int(g, -kWindow, kWindow));
      dot = (x - sc.target.x) * sc.dir_x + (y - sc.target.y) * sc.dir_y;
    } while (dot == 0);
    PointSign s = dot > 0 ? PointSign::Plus : PointSign::Minus;
    sc.sensors.push_back(Point{x, y, i, s});
  }

  // k distinct faults via a partial Fisher-Yates shuffle.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng_below(g, static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  sc.flipped_ids.assign(idx.begin(), idx.begin() + k);
  std::sort(sc.flipped_ids.begin(), sc.flipped_ids.end());
  for (int id : sc.flipped_ids)
    sc.sensors[id].sign = flipped(sc.sensors[id].sign);
  return sc;
}

std::pair<SeparatorSolution, IdentifyMetrics> identify_faulty(
    const Scenario& sc, SolverAlgo algo) {
  std::vector<Point> plus, minus;
  for (const Point& p : sc.sensors)
    (p.sign == PointSign::Plus ? plus : minus).push_back(p);
  SeparatorSolution sol = algo == SolverAlgo::Naive ? solve_naive(plus, minus)
                                                    : solve_dual(plus, minus);

  IdentifyMetrics m;
  m.k_min = sol.k_min;
  m.num_flipped = static_cast<int>(sc.flipped_ids.size());
  int hits = 0;
  for (int id : sol.removed_ids)
    if (std::binary_search(sc.flipped_ids.begin(), sc.flipped_ids.end(), id))
      ++hits;
  m.precision = sol.removed_ids.empty()
                    ? 1.0
                    : static_cast<double>(hits) / sol.removed_ids.size();
  m.recall = sc.flipped_ids.empty()
                 ? 1.0
                 : static_cast<double>(hits) / sc.flipped_ids.size();
  return {std::move(sol), m};
}

std::string scenario_sidecar_json(const Scenario& sc, bool pretty) {
  nlohmann::ordered_json j;
  j["target"] = {{"x", rat_to_string(sc.target.x)},
                 {"y", rat_to_string(sc.target.y)}};
  j["direction"] = {{"x", rat_to_string(sc.dir_x)},
                    {"y", rat_to_string(sc.dir_y)}};
  j["flipped_ids"] = sc.flipped_ids;
  j["seed"] = sc.seed;
  return pretty ? j.dump(2) : j.dump();
}

std::string scenario_instance_text(const Scenario& sc) {
  Instance ins;
  ins.points = sc.sensors;
  return serialize_instance(ins);
}

}  // namespace hullsep
