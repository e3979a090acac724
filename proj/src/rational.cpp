#include "hullsep/rational.hpp"

#include <cctype>

namespace hullsep {

std::string rat_to_string(const Rat& r) {
  Int n = num(r);
  Int d = den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace {

bool parse_int(std::string_view s, Int& out) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return false;
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? Int(-v) : v;
  return true;
}

}  // namespace

std::optional<Rat> rat_from_string(std::string_view s) {
  size_t slash = s.find('/');
  Int n, d;
  if (slash == std::string_view::npos) {
    if (!parse_int(s, n)) return std::nullopt;
    return Rat(n);
  }
  if (!parse_int(s.substr(0, slash), n)) return std::nullopt;
  if (!parse_int(s.substr(slash + 1), d)) return std::nullopt;
  if (d == 0) return std::nullopt;
  return Rat(n) / Rat(d);  // normalizes sign; Rat(p,q) requires q > 0
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace hullsep
