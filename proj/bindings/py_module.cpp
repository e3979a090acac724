// Python bindings for the hull-separation library.  The surface mirrors the
// CLI and stays at the text/JSON level so exact rationals never cross the
// language boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullsep/dual_solver.hpp"
#include "hullsep/errors.hpp"
#include "hullsep/io.hpp"
#include "hullsep/oracle.hpp"
#include "hullsep/sensor.hpp"
#include "hullsep/separator.hpp"
#include "hullsep/svg.hpp"
#include "hullsep/verify.hpp"

namespace py = pybind11;

namespace {

using namespace hullsep;

SeparatorSolution run_algo(const std::string& algo,
                           const std::vector<Point>& plus,
                           const std::vector<Point>& minus) {
  if (algo == "naive") return solve_naive(plus, minus);
  if (algo == "dual") return solve_dual(plus, minus);
  if (algo == "oracle") return solve_subsets(plus, minus);
  throw InvalidParamsError("unknown algo '" + algo + "'");
}

std::string py_solve(const std::string& instance_text, const std::string& algo,
                     const std::string& mode, bool certify) {
  if (mode != "remove" && mode != "flip")
    throw InvalidParamsError("unknown mode '" + mode + "'");
  Instance ins = parse_instance(instance_text);
  std::vector<Point> plus = ins.plus(), minus = ins.minus();
  SeparatorSolution sol = run_algo(algo, plus, minus);
  if (mode == "flip") sol = flip_solution(plus, minus, sol);
  if (certify) {
    VerificationReport report = verify_solution(plus, minus, sol, true);
    if (!report.valid)
      throw Error("certification failed: " + report_to_json(report));
  }
  return solution_to_json(sol, algo, mode);
}

std::string py_verify(const std::string& instance_text,
                      const std::string& solution_json, bool certify) {
  Instance ins = parse_instance(instance_text);
  SolutionFile sf = solution_from_json(solution_json);
  return report_to_json(verify_solution(ins.plus(), ins.minus(), sf.sol,
                                        certify));
}

std::string py_generate_random(int n, std::uint64_t seed) {
  return serialize_instance(random_instance(n, seed));
}

std::pair<std::string, std::string> py_generate_sensor(int n, int k,
                                                       std::uint64_t seed) {
  Scenario sc = generate_scenario(n, k, seed);
  return {scenario_instance_text(sc), scenario_sidecar_json(sc)};
}

std::string py_render(const std::string& instance_text, const std::string& view,
                      const std::optional<std::string>& solution_json) {
  if (view != "primal" && view != "dual")
    throw InvalidParamsError("unknown view '" + view + "'");
  Instance ins = parse_instance(instance_text);
  SeparatorSolution sol;
  const SeparatorSolution* sp = nullptr;
  if (solution_json) {
    sol = solution_from_json(*solution_json).sol;
    sp = &sol;
  }
  std::vector<Point> plus = ins.plus(), minus = ins.minus();
  return view == "dual" ? render_dual(plus, minus, sp)
                        : render_primal(plus, minus, sp);
}

}  // namespace

PYBIND11_MODULE(hullsep, m) {
  m.doc() = "minimum-outlier hull separation of labeled planar points";
  m.attr("__version__") = "0.1.0";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidParamsError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InstanceTooLargeError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("solve", &py_solve, py::arg("instance_text"), py::arg("algo") = "dual",
        py::arg("mode") = "remove", py::arg("certify") = false,
        "Solve an instance; returns the solution as a JSON string.");
  m.def("verify", &py_verify, py::arg("instance_text"),
        py::arg("solution_json"), py::arg("certify") = false,
        "Check a solution against an instance; returns a JSON report.");
  m.def("generate_random", &py_generate_random, py::arg("n"),
        py::arg("seed") = 1,
        "Generate a uniform random labeled instance as instance text.");
  m.def("generate_sensor", &py_generate_sensor, py::arg("n"), py::arg("k"),
        py::arg("seed") = 1,
        "Generate a sensor scenario; returns (instance_text, sidecar_json).");
  m.def("render", &py_render, py::arg("instance_text"),
        py::arg("view") = "primal", py::arg("solution_json") = py::none(),
        "Render an instance (optionally with a solution overlay) as SVG.");
}
