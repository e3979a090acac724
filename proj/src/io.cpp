#include "hullsep/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hullsep/errors.hpp"
#include "hullsep/rng.hpp"

namespace hullsep {

std::vector<Point> Instance::plus() const {
  std::vector<Point> out;
  for (const Point& p : points)
    if (p.sign == PointSign::Plus) out.push_back(p);
  return out;
}

std::vector<Point> Instance::minus() const {
  std::vector<Point> out;
  for (const Point& p : points)
    if (p.sign == PointSign::Minus) out.push_back(p);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance ins;
  std::string raw;
  int line_no = 0;
  int next_id = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    size_t c1 = line.find(',');
    size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos ||
        line.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError(line_no, "expected 'x,y,sign'");

    auto x = rat_from_string(trim(line.substr(0, c1)));
    if (!x) throw ParseError(line_no, "bad x coordinate");
    auto y = rat_from_string(trim(line.substr(c1 + 1, c2 - c1 - 1)));
    if (!y) throw ParseError(line_no, "bad y coordinate");
    std::string_view s = trim(line.substr(c2 + 1));
    PointSign sign;
    if (s == "+1")
      sign = PointSign::Plus;
    else if (s == "-1")
      sign = PointSign::Minus;
    else
      throw ParseError(line_no, "sign must be +1 or -1");

    ins.points.push_back(Point{*x, *y, next_id++, sign});
  }
  return ins;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& ins) {
  std::ostringstream os;
  for (const Point& p : ins.points)
    os << rat_to_string(p.x) << ',' << rat_to_string(p.y) << ','
       << (p.sign == PointSign::Plus ? "+1" : "-1") << '\n';
  return os.str();
}

std::string solution_to_json(const SeparatorSolution& sol,
                             const std::string& algo, const std::string& mode) {
  nlohmann::ordered_json j;
  j["k_min"] = sol.k_min;
  j["removed_ids"] = sol.removed_ids;
  j["line"] = {{"a", sol.line.a.str()},
               {"b", sol.line.b.str()},
               {"c", sol.line.c.str()}};
  j["orientation"] = to_string(sol.orientation);
  j["algo"] = algo;
  j["mode"] = mode;
  return j.dump(2);
}

SolutionFile solution_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad solution JSON: ") + e.what());
  }
  try {
    SolutionFile sf;
    sf.sol.k_min = j.at("k_min").get<int>();
    sf.sol.removed_ids = j.at("removed_ids").get<std::vector<int>>();
    auto coeff = [&j](const char* k) {
      auto r = rat_from_string(j.at("line").at(k).get<std::string>());
      if (!r || den(*r) != 1)
        throw ParseError(0, std::string("line coefficient ") + k +
                                " is not an integer");
      return *r;
    };
    sf.sol.line =
        Line::from_coefficients(coeff("a"), coeff("b"), coeff("c"));
    std::string o = j.at("orientation").get<std::string>();
    if (o == "PlusAbove")
      sf.sol.orientation = PlusOrientation::PlusAbove;
    else if (o == "PlusBelow")
      sf.sol.orientation = PlusOrientation::PlusBelow;
    else
      throw ParseError(0, "orientation must be PlusAbove or PlusBelow");
    sf.algo = j.value("algo", "");
    sf.mode = j.value("mode", "remove");
    if (sf.mode != "remove" && sf.mode != "flip")
      throw ParseError(0, "mode must be remove or flip");
    return sf;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad solution JSON: ") + e.what());
  }
}

Instance random_instance(int n, std::uint64_t seed, long coord_range) {
  if (n < 0 || coord_range < 0) throw InvalidParamsError("bad instance size");
  Rng g = make_rng(seed);
  Instance ins;
  ins.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rat x(rng_int(g, -coord_range, coord_range));
    Rat y(rng_int(g, -coord_range, coord_range));
    PointSign s = rng_chance(g, 0.5) ? PointSign::Plus : PointSign::Minus;
    ins.points.push_back(Point{x, y, i, s});
  }
  return ins;
}

Instance balanced_instance(int n, std::uint64_t seed, long coord_range) {
  if (n < 0 || coord_range < 0) throw InvalidParamsError("bad instance size");
  Rng g = make_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Instance ins;
  ins.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rat x(rng_int(g, -coord_range, coord_range));
    Rat y(rng_int(g, -coord_range, coord_range));
    PointSign s = i % 2 == 0 ? PointSign::Plus : PointSign::Minus;
    ins.points.push_back(Point{x, y, i, s});
  }
  return ins;
}

}  // namespace hullsep
