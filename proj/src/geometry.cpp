#include "hullsep/geometry.hpp"

#include <boost/multiprecision/integer.hpp>

#include "hullsep/errors.hpp"

namespace hullsep {

Turn orientation(const Point& a, const Point& b, const Point& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  int s = sign_of(cross);
  if (s > 0) return Turn::Left;
  if (s < 0) return Turn::Right;
  return Turn::Collinear;
}

namespace {

Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / int_gcd(a, b) * b;
}

}  // namespace

Line Line::from_coefficients(const Rat& ra, const Rat& rb, const Rat& rc) {
  if (ra == 0 && rb == 0) throw Error("line normal vector must be nonzero");
  // Scale to integers, then reduce to gcd 1 with the first nonzero of (a,b)
  // positive.
  Int scale = int_lcm(int_lcm(den(ra), den(rb)), den(rc));
  Int a = num(ra) * (scale / den(ra));
  Int b = num(rb) * (scale / den(rb));
  Int c = num(rc) * (scale / den(rc));
  Int g = int_gcd(int_gcd(abs(a), abs(b)), abs(c));
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  int lead = a != 0 ? sign_of(a) : sign_of(b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  Line l;
  l.a = a;
  l.b = b;
  l.c = c;
  l.above_is_positive = b != 0 ? b > 0 : true;  // vertical: a > 0 after flip
  return l;
}

Line Line::through(const Point& u, const Point& v) {
  if (same_coords(u, v)) throw Error("line through coincident points");
  Rat dx = v.x - u.x;
  Rat dy = v.y - u.y;
  // Normal (dy, -dx); c chosen so u is on the line.
  return from_coefficients(dy, -dx, dy * u.x - dx * u.y);
}

Rat Line::slope() const {
  if (vertical()) throw VerticalLineError("vertical line has no slope");
  return Rat(-a) / Rat(b);  // b may be negative; Rat(p,q) requires q > 0
}

Rat Line::y_intercept() const {
  if (vertical()) throw VerticalLineError("vertical line has no y-intercept");
  return Rat(c) / Rat(b);
}

Rat Line::value_at(const Rat& x) const {
  if (vertical()) throw VerticalLineError("vertical line has no y value");
  return (Rat(c) - Rat(a) * x) / Rat(b);
}

bool operator==(const Line& l, const Line& r) {
  return l.a == r.a && l.b == r.b && l.c == r.c &&
         l.above_is_positive == r.above_is_positive;
}

int line_eval_sign(const Line& l, const Point& p) {
  // sign(a*x + b*y - c) with x = xn/xd, y = yn/yd and xd, yd > 0.
  const Int xn = num(p.x), xd = den(p.x);
  const Int yn = num(p.y), yd = den(p.y);
  Int v = l.a * xn * yd + l.b * yn * xd - l.c * xd * yd;
  return sign_of(v);
}

LineSide side_of_line(const Line& l, const Point& p) {
  int s = line_eval_sign(l, p);
  if (s == 0) return LineSide::On;
  bool positive = s > 0;
  return positive == l.above_is_positive ? LineSide::Above : LineSide::Below;
}

DualLine dual_of_point(const Point& p) {
  DualLine d;
  d.slope = p.x;
  d.intercept = p.y;
  d.color = p.sign == PointSign::Minus ? Color::Blue : Color::Red;
  d.source_point_id = p.id;
  return d;
}

Point dual_of_line(const Line& l) {
  if (l.vertical())
    throw VerticalLineError("dual of a vertical line is undefined");
  // l as y = s*x + t maps to (s, -t).
  Point p;
  p.x = l.slope();
  p.y = -l.y_intercept();
  return p;
}

Line primal_line_of_dual_point(const Point& v) {
  // y = v.x * x - v.y  <=>  v.x * x - y = v.y
  return Line::from_coefficients(v.x, Rat(-1), v.y);
}

Line line_of_dual(const DualLine& d) {
  return Line::from_coefficients(d.slope, Rat(-1), d.intercept);
}

}  // namespace hullsep
