#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hullsep/dual_solver.hpp"
#include "hullsep/errors.hpp"
#include "hullsep/io.hpp"
#include "hullsep/oracle.hpp"
#include "hullsep/sensor.hpp"
#include "hullsep/separator.hpp"
#include "hullsep/svg.hpp"
#include "hullsep/verify.hpp"

namespace {

using namespace hullsep;

// Exit codes shared across subcommands.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;      // bad params or unparseable input
constexpr int kExitVerify = 3;     // verification/certification failure
constexpr int kExitOracleCap = 4;  // oracle refused the instance size

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidParamsError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

SeparatorSolution run_algo(const std::string& algo,
                           const std::vector<Point>& plus,
                           const std::vector<Point>& minus) {
  if (algo == "naive") return solve_naive(plus, minus);
  if (algo == "dual") return solve_dual(plus, minus);
  return solve_subsets(plus, minus);
}

int cmd_solve(const std::string& input, const std::string& algo,
              const std::string& mode, bool certify) {
  Instance ins = parse_instance(read_input(input));
  std::vector<Point> plus = ins.plus(), minus = ins.minus();
  SeparatorSolution sol = run_algo(algo, plus, minus);
  if (mode == "flip") sol = flip_solution(plus, minus, sol);
  if (certify) {
    VerificationReport report = verify_solution(plus, minus, sol, true);
    if (!report.valid) {
      std::cerr << report_to_json(report) << '\n';
      return kExitVerify;
    }
  }
  std::cout << solution_to_json(sol, algo, mode) << '\n';
  return kExitOk;
}

int cmd_gen(const std::string& preset, int n, int k, std::uint64_t seed,
            const std::string& sidecar_path) {
  if (preset == "random") {
    std::cout << serialize_instance(random_instance(n, seed));
    return kExitOk;
  }
  Scenario sc = generate_scenario(n, k, seed);
  std::string sidecar = scenario_sidecar_json(sc);
  if (!sidecar_path.empty()) {
    std::ofstream f(sidecar_path);
    if (!f) throw InvalidParamsError("cannot write '" + sidecar_path + "'");
    f << sidecar << '\n';
  }
  // Ground truth also rides along as a comment so the stream stays a valid
  // instance file on its own.
  std::cout << "# sidecar: " << scenario_sidecar_json(sc, false) << '\n'
            << scenario_instance_text(sc);
  return kExitOk;
}

int cmd_bench(const std::string& algos_csv, const std::string& sizes_csv,
              int reps, std::uint64_t seed) {
  auto split_csv = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(item);
    return out;
  };
  std::vector<std::string> algos = split_csv(algos_csv);
  std::vector<int> sizes;
  for (const std::string& s : split_csv(sizes_csv)) {
    try {
      sizes.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw InvalidParamsError("bad size '" + s + "'");
    }
    if (sizes.back() < 0) throw InvalidParamsError("bad size '" + s + "'");
  }
  if (algos.empty()) throw InvalidParamsError("no algorithms given");
  if (sizes.empty()) throw InvalidParamsError("no sizes given");
  for (const std::string& a : algos)
    if (a != "naive" && a != "dual")
      throw InvalidParamsError("unknown algorithm '" + a + "'");
  if (reps < 1) throw InvalidParamsError("reps must be positive");

  bool all_agree = true;
  std::cout << "size,algo,median_ms,agreement\n";
  for (int n : sizes) {
    Instance ins = balanced_instance(n, seed * 1000003ULL + n);
    std::vector<Point> plus = ins.plus(), minus = ins.minus();
    struct Row {
      std::string algo;
      double ms;
      int k_min;
    };
    std::vector<Row> rows;
    for (const std::string& algo : algos) {
      std::vector<double> times;
      int k_min = -1;
      for (int r = 0; r < reps; ++r) {
        auto start = std::chrono::steady_clock::now();
        SeparatorSolution sol = run_algo(algo, plus, minus);
        auto stop = std::chrono::steady_clock::now();
        times.push_back(
            std::chrono::duration<double, std::milli>(stop - start).count());
        k_min = sol.k_min;
      }
      std::sort(times.begin(), times.end());
      double median = times.size() % 2 == 1
                          ? times[times.size() / 2]
                          : (times[times.size() / 2 - 1] +
                             times[times.size() / 2]) /
                                2;
      rows.push_back({algo, median, k_min});
    }
    bool agree = std::all_of(rows.begin(), rows.end(), [&rows](const Row& r) {
      return r.k_min == rows[0].k_min;
    });
    all_agree = all_agree && agree;
    for (const Row& r : rows) {
      char ms[64];
      std::snprintf(ms, sizeof(ms), "%.3f", r.ms);
      std::cout << n << ',' << r.algo << ',' << ms << ','
                << (agree ? "true" : "false") << '\n';
    }
  }
  return all_agree ? kExitOk : kExitVerify;
}

int cmd_render(const std::string& input, const std::string& view,
               const std::string& solution_path) {
  Instance ins = parse_instance(read_input(input));
  SeparatorSolution sol;
  bool has_sol = false;
  if (!solution_path.empty()) {
    sol = solution_from_json(read_input(solution_path)).sol;
    has_sol = true;
  }
  std::vector<Point> plus = ins.plus(), minus = ins.minus();
  const SeparatorSolution* sp = has_sol ? &sol : nullptr;
  std::cout << (view == "dual" ? render_dual(plus, minus, sp)
                               : render_primal(plus, minus, sp));
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& solution_path,
               bool certify) {
  Instance ins = parse_instance(read_input(input));
  SolutionFile sf = solution_from_json(read_input(solution_path));
  VerificationReport report =
      verify_solution(ins.plus(), ins.minus(), sf.sol, certify);
  std::cout << report_to_json(report) << '\n';
  return report.valid ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-outlier hull separation of labeled planar points"};
  app.require_subcommand(1);

  std::string input = "-", algo = "dual", mode = "remove";
  bool certify = false;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("input", input, "instance file, or - for stdin");
  solve->add_option("--algo", algo, "solver: naive, dual or oracle")
      ->check(CLI::IsMember({"naive", "dual", "oracle"}));
  solve->add_option("--mode", mode, "report removals or sign flips")
      ->check(CLI::IsMember({"remove", "flip"}));
  solve->add_flag("--certify", certify, "verify the result, oracle-certified");

  std::string preset = "random", sidecar;
  int gen_n = 0, gen_k = 0;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--preset", preset, "random or sensor")
      ->check(CLI::IsMember({"random", "sensor"}));
  gen->add_option("-n,--num", gen_n, "number of points")->required();
  gen->add_option("-k,--faults", gen_k, "faulty sensors (sensor preset)");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--sidecar", sidecar, "write sensor ground truth here");

  std::string algos_csv = "naive,dual", sizes_csv;
  int reps = 5;
  auto* bench = app.add_subcommand("bench", "time solvers on random inputs");
  bench->add_option("--algos", algos_csv, "comma-separated solvers");
  bench->add_option("--sizes", sizes_csv, "comma-separated point counts")
      ->required();
  bench->add_option("--reps", reps, "runs per measurement");
  bench->add_option("--seed", seed, "rng seed");

  std::string view = "primal", solution_path;
  auto* render = app.add_subcommand("render", "draw an instance as SVG");
  render->add_option("input", input, "instance file, or - for stdin");
  render->add_option("--view", view, "primal or dual")
      ->check(CLI::IsMember({"primal", "dual"}));
  render->add_option("--solution", solution_path, "solution JSON to overlay");

  auto* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("input", input, "instance file, or - for stdin");
  verify->add_option("--solution", solution_path, "solution JSON")->required();
  verify->add_flag("--certify", certify, "also certify optimality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(input, algo, mode, certify);
    if (gen->parsed()) return cmd_gen(preset, gen_n, gen_k, seed, sidecar);
    if (bench->parsed()) return cmd_bench(algos_csv, sizes_csv, reps, seed);
    if (render->parsed()) return cmd_render(input, view, solution_path);
    if (verify->parsed()) return cmd_verify(input, solution_path, certify);
  } catch (const InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOracleCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
