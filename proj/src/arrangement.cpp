#include "hullsep/arrangement.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "hullsep/errors.hpp"
#include "hullsep/hull.hpp"

namespace hullsep {

namespace {

// CCW-from-+x-axis ordering of exact direction vectors.
int half_of(const Rat& dx, const Rat& dy) {
  if (dy != 0) return dy > 0 ? 0 : 1;
  return dx > 0 ? 0 : 1;
}

struct OutEdgeDir {
  int he;
  Rat dx, dy;
};

bool dir_less(const OutEdgeDir& a, const OutEdgeDir& b) {
  int ha = half_of(a.dx, a.dy), hb = half_of(b.dx, b.dy);
  if (ha != hb) return ha < hb;
  return a.dx * b.dy - a.dy * b.dx > 0;
}

}  // namespace

Arrangement build_arrangement(const std::vector<DualLine>& duals) {
  if (duals.empty())
    throw InvalidParamsError("arrangement needs at least one line");

  Arrangement arr;

  // Collapse coincident lines, accumulating color multiplicities. The map
  // key order gives a canonical line numbering.
  struct Acc {
    int red = 0, blue = 0;
    std::vector<int> src;
  };
  std::map<std::pair<Rat, Rat>, Acc> acc;
  for (const DualLine& d : duals) {
    Acc& a = acc[{d.slope, -d.intercept}];
    (d.color == Color::Red ? a.red : a.blue)++;
    a.src.push_back(d.source_point_id);
    (d.color == Color::Red ? arr.total_red : arr.total_blue)++;
  }
  for (auto& [key, a] : acc) {
    ArrangementLine al;
    al.slope = key.first;
    al.y0 = key.second;
    al.red_mult = a.red;
    al.blue_mult = a.blue;
    std::sort(a.src.begin(), a.src.end());
    al.source_point_ids = std::move(a.src);
    arr.lines.push_back(std::move(al));
  }
  const int L = static_cast<int>(arr.lines.size());

  // Box half-width: strictly beyond every pairwise intersection and every
  // line's axis intercepts, so each line crosses the box interior and all
  // vertices of the full arrangement are strictly inside.
  Rat maxabs = 0;
  auto stretch = [&maxabs](const Rat& v) {
    Rat a = rat_abs(v);
    if (a > maxabs) maxabs = a;
  };
  std::vector<std::vector<Rat>> xs_on_line(L);
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      if (arr.lines[i].slope == arr.lines[j].slope) continue;  // parallel
      Rat x = (arr.lines[j].y0 - arr.lines[i].y0) /
              (arr.lines[i].slope - arr.lines[j].slope);
      stretch(x);
      stretch(arr.lines[i].value_at(x));
      xs_on_line[i].push_back(x);
      xs_on_line[j].push_back(x);
    }
  }
  for (const ArrangementLine& l : arr.lines) {
    stretch(l.y0);
    if (l.slope != 0) stretch(-l.y0 / l.slope);
  }
  const Rat W = maxabs + 1;
  arr.box = W;

  std::map<std::pair<Rat, Rat>, int> vid;
  auto vertex_at = [&](const Rat& x, const Rat& y) {
    auto [it, inserted] =
        vid.try_emplace({x, y}, static_cast<int>(arr.vertices.size()));
    if (inserted) arr.vertices.push_back(ArrVertex{Point{x, y, -1}});
    return it->second;
  };

  struct Seg {
    int u, v, line;
  };
  std::vector<Seg> segs;

  // Chain of collinear edges along each line, clipped to the box.
  for (int i = 0; i < L; ++i) {
    const ArrangementLine& l = arr.lines[i];
    std::vector<std::pair<Rat, int>> chain;  // (x, vertex)
    Rat yl = l.value_at(-W), yr = l.value_at(W);
    if (rat_abs(yl) <= W) chain.emplace_back(-W, vertex_at(-W, yl));
    if (rat_abs(yr) <= W) chain.emplace_back(W, vertex_at(W, yr));
    if (l.slope != 0) {
      for (int s : {-1, +1}) {
        Rat Y = Rat(s) * W;
        Rat x = (Y - l.y0) / l.slope;
        if (rat_abs(x) < W) chain.emplace_back(x, vertex_at(x, Y));
      }
    }
    if (chain.size() != 2)
      throw InconsistentArrangementError("line does not cross the box twice");
    for (const Rat& x : xs_on_line[i])
      chain.emplace_back(x, vertex_at(x, l.value_at(x)));
    std::sort(chain.begin(), chain.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      if (chain[k].first == chain[k + 1].first) continue;  // concurrent lines
      segs.push_back({chain[k].second, chain[k + 1].second, i});
    }
  }

  // Box boundary, subdivided by every line crossing. Corners first so they
  // exist even when no line is nearby.
  vertex_at(-W, -W);
  vertex_at(W, -W);
  vertex_at(W, W);
  vertex_at(-W, W);
  {
    const int V = static_cast<int>(arr.vertices.size());
    std::vector<std::pair<Rat, int>> left, right, top, bottom;
    for (int v = 0; v < V; ++v) {
      const Point& p = arr.vertices[v].pos;
      if (p.x == -W) left.emplace_back(p.y, v);
      if (p.x == W) right.emplace_back(p.y, v);
      if (p.y == W) top.emplace_back(p.x, v);
      if (p.y == -W) bottom.emplace_back(p.x, v);
    }
    for (auto* side : {&left, &right, &top, &bottom}) {
      std::sort(side->begin(), side->end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (size_t k = 0; k + 1 < side->size(); ++k)
        segs.push_back({(*side)[k].second, (*side)[k + 1].second, -1});
    }
  }

  // Half-edges and twins.
  arr.half_edges.reserve(segs.size() * 2);
  for (const Seg& s : segs) {
    int h1 = static_cast<int>(arr.half_edges.size());
    HalfEdge a, b;
    a.origin = s.u;
    b.origin = s.v;
    a.line = b.line = s.line;
    a.twin = h1 + 1;
    b.twin = h1;
    arr.half_edges.push_back(a);
    arr.half_edges.push_back(b);
  }

  // next/prev from counterclockwise out-edge order around each vertex:
  // next(h) is the CW neighbor of twin(h) among twin(h)'s siblings.
  const int V = static_cast<int>(arr.vertices.size());
  std::vector<std::vector<OutEdgeDir>> out(V);
  for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
    const HalfEdge& he = arr.half_edges[h];
    const Point& o = arr.vertices[he.origin].pos;
    const Point& t = arr.vertices[he.target(arr.half_edges)].pos;
    out[he.origin].push_back({h, t.x - o.x, t.y - o.y});
  }
  for (int v = 0; v < V; ++v) {
    auto& lst = out[v];
    std::sort(lst.begin(), lst.end(), dir_less);
    const int k = static_cast<int>(lst.size());
    for (int i = 0; i < k; ++i) {
      int h_in = arr.half_edges[lst[i].he].twin;       // ends at v
      int h_out = lst[(i + k - 1) % k].he;             // CW predecessor
      arr.half_edges[h_in].next = h_out;
      arr.half_edges[h_out].prev = h_in;
    }
  }

  // Faces from next-cycles; the unique negative-area cycle is the outer face.
  for (int h0 = 0; h0 < static_cast<int>(arr.half_edges.size()); ++h0) {
    if (arr.half_edges[h0].face != -1) continue;
    int f = static_cast<int>(arr.faces.size());
    Rat area2 = 0;
    int h = h0;
    do {
      arr.half_edges[h].face = f;
      const Point& a = arr.vertices[arr.half_edges[h].origin].pos;
      const Point& b =
          arr.vertices[arr.half_edges[h].target(arr.half_edges)].pos;
      area2 += a.x * b.y - a.y * b.x;
      h = arr.half_edges[h].next;
    } while (h != h0);
    ArrFace face;
    face.edge = h0;
    face.outer = area2 < 0;
    if (area2 == 0)
      throw InconsistentArrangementError("degenerate face cycle");
    if (face.outer) {
      if (arr.outer_face != -1)
        throw InconsistentArrangementError("two outer faces");
      arr.outer_face = f;
    }
    arr.faces.push_back(face);
  }
  if (arr.outer_face == -1)
    throw InconsistentArrangementError("no outer face");

  // Euler check on the clipped subdivision.
  long long Vn = static_cast<long long>(arr.vertices.size());
  long long En = static_cast<long long>(arr.half_edges.size()) / 2;
  long long Fn = static_cast<long long>(arr.faces.size());
  if (Vn - En + Fn != 2)
    throw InconsistentArrangementError("Euler formula violated");

  return arr;
}

std::vector<int> face_cycle(const Arrangement& arr, int face) {
  std::vector<int> cycle;
  int h0 = arr.faces[face].edge;
  int h = h0;
  do {
    cycle.push_back(arr.half_edges[h].origin);
    h = arr.half_edges[h].next;
  } while (h != h0);
  return cycle;
}

Point representative_point(const Arrangement& arr, int face) {
  if (face < 0 || face >= static_cast<int>(arr.faces.size()) ||
      arr.faces[face].outer)
    throw InvalidParamsError("not a bounded arrangement face");
  std::vector<int> cycle = face_cycle(arr, face);
  Rat sx = 0, sy = 0;
  for (int v : cycle) {
    sx += arr.vertices[v].pos.x;
    sy += arr.vertices[v].pos.y;
  }
  Rat n = static_cast<int>(cycle.size());
  Point p;
  p.x = sx / n;
  p.y = sy / n;  // vertex centroid: strictly interior for convex faces
  return p;
}

int upper_envelope_start(const Arrangement& arr) {
  // (0, y*) with y* strictly between the envelope at x=0 and the box top
  // lies in the upper-envelope cell.
  Rat top = arr.lines[0].y0;
  for (const ArrangementLine& l : arr.lines)
    if (l.y0 > top) top = l.y0;
  Point probe;
  probe.x = 0;
  probe.y = (top + arr.box) / 2;

  for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f) {
    if (arr.faces[f].outer) continue;
    Hull poly;
    for (int v : face_cycle(arr, f)) poly.vertices.push_back(arr.vertices[v].pos);
    if (point_in_convex_polygon(poly, probe) == Containment::Inside) return f;
  }
  throw InconsistentArrangementError("upper-envelope cell not found");
}

std::string dump_arrangement(const Arrangement& arr) {
  std::ostringstream os;
  os << "box " << rat_to_string(arr.box) << "\n";
  os << "lines " << arr.lines.size() << "\n";
  for (size_t i = 0; i < arr.lines.size(); ++i) {
    const ArrangementLine& l = arr.lines[i];
    os << "  L" << i << " slope " << rat_to_string(l.slope) << " y0 "
       << rat_to_string(l.y0) << " red " << l.red_mult << " blue "
       << l.blue_mult << " src";
    for (int id : l.source_point_ids) os << " " << id;
    os << "\n";
  }
  os << "vertices " << arr.vertices.size() << "\n";
  for (size_t v = 0; v < arr.vertices.size(); ++v)
    os << "  V" << v << " " << rat_to_string(arr.vertices[v].pos.x) << " "
       << rat_to_string(arr.vertices[v].pos.y) << "\n";
  os << "faces " << arr.faces.size() << " outer " << arr.outer_face << "\n";
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    os << "  F" << f << (arr.faces[f].outer ? " outer" : "") << " cycle";
    int h0 = arr.faces[f].edge;
    int h = h0;
    do {
      const HalfEdge& he = arr.half_edges[h];
      os << " V" << he.origin << (he.line >= 0 ? ":L" : ":B");
      if (he.line >= 0) os << he.line;
      h = he.next;
    } while (h != h0);
    os << "\n";
  }
  return os.str();
}

}  // namespace hullsep
