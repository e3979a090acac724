#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hullsep {

// All geometry in this library is exact. Coordinates and line coefficients
// are arbitrary-precision rationals kept in canonical form (gcd-reduced,
// positive denominator), so equality is structural and no rounding occurs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

// "p/q" for non-integers, plain "p" otherwise.
std::string rat_to_string(const Rat& r);

// Accepts an optionally signed decimal integer or exact fraction "p/q".
// Returns nullopt on malformed input (including q == 0).
std::optional<Rat> rat_from_string(std::string_view s);

double rat_to_double(const Rat& r);

}  // namespace hullsep
