#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hullsep/separator.hpp"

namespace hullsep {

// A labeled instance. Point ids follow input line order starting at 0.
struct Instance {
  std::vector<Point> points;

  std::vector<Point> plus() const;
  std::vector<Point> minus() const;
};

// Instance text format, one point per line:
//   x,y,sign
// with x and y decimal integers or rationals p/q, sign +1 or -1. Lines that
// are blank or start with '#' are ignored. Throws ParseError carrying the
// 1-based line number on any malformed line.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

// Canonical serialization; parse(serialize(i)) reproduces i exactly.
std::string serialize_instance(const Instance& ins);

// Solution JSON: {"k_min", "removed_ids", "line": {"a","b","c"},
// "orientation", "algo", "mode"} with exact coefficients as strings.
std::string solution_to_json(const SeparatorSolution& sol,
                             const std::string& algo, const std::string& mode);

struct SolutionFile {
  SeparatorSolution sol;
  std::string algo;
  std::string mode;  // "remove" or "flip"
};

// Throws ParseError (line 0) on malformed JSON or fields.
SolutionFile solution_from_json(const std::string& text);

// Random labeled instance: integer coordinates uniform in
// [-coord_range, coord_range], signs by fair coin. Deterministic in the seed.
Instance random_instance(int n, std::uint64_t seed, long coord_range = 50);

// n points with balanced labels (difference at most one), same coordinate
// model; used by the benchmark driver.
Instance balanced_instance(int n, std::uint64_t seed, long coord_range = 1000);

}  // namespace hullsep
