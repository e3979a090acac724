#include "hullsep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "hullsep/hull.hpp"

namespace hullsep {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v == 0 ? 0.0 : v);  // avoid "-0.00"
  return buf;
}

struct View {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  double scale = 1;

  void fit(double x, double y, bool first) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }

  void finish() {
    double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    double pad = span * 0.08 + 0.5;
    min_x -= pad, max_x += pad;
    min_y -= pad, max_y += pad;
    span = std::max(max_x - min_x, max_y - min_y);
    scale = (kCanvas - 2 * kMargin) / span;
  }

  double X(double x) const { return kMargin + (x - min_x) * scale; }
  double Y(double y) const { return kCanvas - kMargin - (y - min_y) * scale; }
};

std::string header() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << (int)kCanvas << "\" height=\"" << (int)kCanvas << "\" viewBox=\"0 0 "
     << (int)kCanvas << ' ' << (int)kCanvas << "\">\n"
     << "  <rect class=\"bg\" x=\"0\" y=\"0\" width=\"" << (int)kCanvas
     << "\" height=\"" << (int)kCanvas << "\" fill=\"#fdfdfd\"/>\n";
  return os.str();
}

const char* kPlusColor = "#c0392b";
const char* kMinusColor = "#2e6da4";

// Endpoints of the segment of a*x + b*y = c crossing the whole view; relies
// on the SVG viewport clipping the overshoot.
std::pair<std::pair<double, double>, std::pair<double, double>> line_span(
    const Line& l, const View& v) {
  double a = rat_to_double(Rat(l.a));
  double b = rat_to_double(Rat(l.b));
  double c = rat_to_double(Rat(l.c));
  double cx = (v.min_x + v.max_x) / 2, cy = (v.min_y + v.max_y) / 2;
  double n2 = a * a + b * b;
  double d = (a * cx + b * cy - c) / n2;
  double px = cx - d * a, py = cy - d * b;  // projection of the view center
  double un = std::sqrt(n2);
  double ux = b / un, uy = -a / un;
  double reach = (v.max_x - v.min_x) + (v.max_y - v.min_y);
  return {{px - reach * ux, py - reach * uy},
          {px + reach * ux, py + reach * uy}};
}

void emit_line(std::ostringstream& os, const View& v, double x1, double y1,
               double x2, double y2, const std::string& attrs) {
  os << "  <line x1=\"" << fmt(v.X(x1)) << "\" y1=\"" << fmt(v.Y(y1))
     << "\" x2=\"" << fmt(v.X(x2)) << "\" y2=\"" << fmt(v.Y(y2)) << "\" "
     << attrs << "/>\n";
}

}  // namespace

std::string render_primal(const std::vector<Point>& plus,
                          const std::vector<Point>& minus,
                          const SeparatorSolution* sol) {
  std::ostringstream os;
  os << header();
  if (plus.empty() && minus.empty() && !sol) {
    os << "</svg>\n";
    return os.str();
  }

  View v;
  bool first = true;
  for (const std::vector<Point>* pts : {&plus, &minus})
    for (const Point& p : *pts) {
      v.fit(rat_to_double(p.x), rat_to_double(p.y), first);
      first = false;
    }
  if (first) v.fit(0, 0, true);
  v.finish();

  std::vector<int> removed;
  if (sol) removed = sol->removed_ids;
  std::sort(removed.begin(), removed.end());
  auto is_removed = [&removed](int id) {
    return std::binary_search(removed.begin(), removed.end(), id);
  };

  // Kept hull outlines under the points.
  for (const std::vector<Point>* pts : {&plus, &minus}) {
    std::vector<Point> kept;
    for (const Point& p : *pts)
      if (!is_removed(p.id)) kept.push_back(p);
    Hull h = convex_hull(kept);
    if (h.size() < 2) continue;
    const char* color = pts == &plus ? kPlusColor : kMinusColor;
    os << "  <polygon class=\"hull\" points=\"";
    for (size_t i = 0; i < h.size(); ++i)
      os << (i ? " " : "") << fmt(v.X(rat_to_double(h.vertices[i].x))) << ','
         << fmt(v.Y(rat_to_double(h.vertices[i].y)));
    os << "\" fill=\"" << color << "\" fill-opacity=\"0.12\" stroke=\""
       << color << "\" stroke-width=\"1.5\"/>\n";
  }

  for (const std::vector<Point>* pts : {&plus, &minus})
    for (const Point& p : *pts) {
      const char* color = pts == &plus ? kPlusColor : kMinusColor;
      bool gone = is_removed(p.id);
      os << "  <circle class=\"" << (pts == &plus ? "pt plus" : "pt minus")
         << (gone ? " removed" : "") << "\" cx=\""
         << fmt(v.X(rat_to_double(p.x))) << "\" cy=\""
         << fmt(v.Y(rat_to_double(p.y))) << "\" r=\"4.5\" fill=\"" << color
         << '"' << (gone ? " opacity=\"0.3\"" : "") << "/>\n";
    }

  if (sol) {
    auto [e1, e2] = line_span(sol->line, v);
    std::ostringstream attrs;
    attrs << "class=\"separator\" stroke=\"#222\" stroke-width=\"2\" "
             "stroke-dasharray=\"7,4\"";
    emit_line(os, v, e1.first, e1.second, e2.first, e2.second, attrs.str());
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dual(const std::vector<Point>& plus,
                        const std::vector<Point>& minus,
                        const SeparatorSolution* sol) {
  std::ostringstream os;
  os << header();

  struct DLine {
    double s, t;  // y = s*x - t
    bool is_plus;
  };
  std::vector<DLine> lines;
  for (const std::vector<Point>* pts : {&plus, &minus})
    for (const Point& p : *pts) {
      DualLine d = dual_of_point(p);
      lines.push_back(
          {rat_to_double(d.slope), rat_to_double(d.intercept), pts == &plus});
    }

  if (lines.empty() && !sol) {
    os << "</svg>\n";
    return os.str();
  }

  std::vector<std::pair<double, double>> crossings;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].s == lines[j].s) continue;
      double x = (lines[i].t - lines[j].t) / (lines[i].s - lines[j].s);
      crossings.push_back({x, lines[i].s * x - lines[i].t});
    }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()),
                  crossings.end());

  bool has_marker = sol && !sol->line.vertical();
  double mx = 0, my = 0;
  if (has_marker) {
    Point d = dual_of_line(sol->line);
    mx = rat_to_double(d.x);
    my = rat_to_double(d.y);
  }

  View v;
  bool first = true;
  for (auto& [x, y] : crossings) {
    v.fit(x, y, first);
    first = false;
  }
  for (const DLine& l : lines) {
    v.fit(0, -l.t, first);  // y-intercept keeps every line in view
    first = false;
  }
  if (has_marker) {
    v.fit(mx, my, first);
    first = false;
  }
  if (first) v.fit(0, 0, true);
  v.finish();

  for (const DLine& l : lines) {
    double x1 = v.min_x, x2 = v.max_x;
    std::ostringstream attrs;
    attrs << "class=\"dual " << (l.is_plus ? "plus" : "minus")
          << "\" stroke=\"" << (l.is_plus ? kPlusColor : kMinusColor)
          << "\" stroke-width=\"1.5\"";
    emit_line(os, v, x1, l.s * x1 - l.t, x2, l.s * x2 - l.t, attrs.str());
  }

  for (auto& [x, y] : crossings)
    os << "  <circle class=\"vertex\" cx=\"" << fmt(v.X(x)) << "\" cy=\""
       << fmt(v.Y(y)) << "\" r=\"3\" fill=\"#333\"/>\n";

  if (has_marker) {
    double s = 6;
    os << "  <rect class=\"cell-marker\" x=\"" << fmt(v.X(mx) - s) << "\" y=\""
       << fmt(v.Y(my) - s) << "\" width=\"" << fmt(2 * s) << "\" height=\""
       << fmt(2 * s) << "\" fill=\"none\" stroke=\"#111\" "
          "stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hullsep
