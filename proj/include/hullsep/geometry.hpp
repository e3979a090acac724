#pragma once

#include <vector>

#include "hullsep/rational.hpp"

namespace hullsep {

enum class PointSign { Plus, Minus, Unlabeled };

inline PointSign flipped(PointSign s) {
  if (s == PointSign::Plus) return PointSign::Minus;
  if (s == PointSign::Minus) return PointSign::Plus;
  return s;
}

struct Point {
  Rat x;
  Rat y;
  int id = -1;
  PointSign sign = PointSign::Unlabeled;
};

inline bool same_coords(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

enum class Turn { Left, Right, Collinear };

// Sign of (b-a) x (c-a), computed exactly.
Turn orientation(const Point& a, const Point& b, const Point& c);

enum class LineSide { Above, Below, On };

inline LineSide opposite(LineSide s) {
  if (s == LineSide::Above) return LineSide::Below;
  if (s == LineSide::Below) return LineSide::Above;
  return LineSide::On;
}

// Oriented line a*x + b*y = c with integer coefficients, gcd(a,b,c) = 1 and
// the first nonzero of (a,b) positive. The stored orientation bit fixes the
// Above side: greater y for non-vertical lines, greater x for vertical ones.
struct Line {
  Int a;
  Int b;
  Int c;
  bool above_is_positive = true;  // Above <=> sign(a*x + b*y - c) matches

  static Line from_coefficients(const Rat& a, const Rat& b, const Rat& c);
  // Line through two points with distinct coordinates.
  static Line through(const Point& u, const Point& v);

  bool vertical() const { return b == 0; }
  // y = slope()*x + y_intercept() for non-vertical lines.
  Rat slope() const;
  Rat y_intercept() const;
  Rat value_at(const Rat& x) const;  // y on the line; non-vertical only
};

bool operator==(const Line& l, const Line& r);

// Exact sign of a*x + b*y - c at p; +1/0/-1.
int line_eval_sign(const Line& l, const Point& p);

LineSide side_of_line(const Line& l, const Point& p);

enum class Color { Red, Blue };

// Dual of a point (a,b): the line y = a*x - b. Red <=> Plus.
struct DualLine {
  Rat slope;
  Rat intercept;  // y = slope*x - intercept
  Color color = Color::Red;
  int source_point_id = -1;
};

DualLine dual_of_point(const Point& p);

// Inverse transform: non-vertical l written y = s*x + t maps to (s, -t).
// Throws VerticalLineError when l is vertical.
Point dual_of_line(const Line& l);

// The primal line whose dual point is v: y = v.x * x - v.y.
Line primal_line_of_dual_point(const Point& v);

Line line_of_dual(const DualLine& d);

}  // namespace hullsep
