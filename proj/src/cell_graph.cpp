#include "hullsep/cell_graph.hpp"

#include <deque>
#include <sstream>

#include "hullsep/errors.hpp"

namespace hullsep {

CellGraph build_cell_graph(const Arrangement& arr) {
  CellGraph g;
  const int F = static_cast<int>(arr.faces.size());
  g.adj.resize(F);
  g.is_cell.assign(F, false);
  g.weights.assign(F, {-1, -1});
  for (int f = 0; f < F; ++f) g.is_cell[f] = !arr.faces[f].outer;

  for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
    const HalfEdge& he = arr.half_edges[h];
    if (he.line < 0 || he.twin < h) continue;  // box edge or already seen
    int f1 = he.face;
    int f2 = arr.half_edges[he.twin].face;
    if (!g.is_cell[f1] || !g.is_cell[f2])
      throw InconsistentArrangementError("line edge borders the outer face");
    // Dual lines are never vertical, so the +x-directed half-edge has the
    // line's upper side on its left.
    const Point& o = arr.vertices[he.origin].pos;
    const Point& t = arr.vertices[he.target(arr.half_edges)].pos;
    CellGraphEdge e;
    e.above_face = t.x > o.x ? f1 : f2;
    e.below_face = t.x > o.x ? f2 : f1;
    e.line = he.line;
    e.red_mult = arr.lines[he.line].red_mult;
    e.blue_mult = arr.lines[he.line].blue_mult;
    int ix = static_cast<int>(g.edges.size());
    g.edges.push_back(e);
    g.adj[f1].push_back(ix);
    g.adj[f2].push_back(ix);
  }
  return g;
}

void propagate_weights(CellGraph& g, int start, int total_red) {
  const int F = static_cast<int>(g.adj.size());
  if (start < 0 || start >= F || !g.is_cell[start])
    throw InvalidParamsError("start is not a cell");
  for (auto& w : g.weights) w = {-1, -1};
  g.weights[start] = {total_red, 0};

  std::deque<int> queue{start};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int ix : g.adj[u]) {
      const CellGraphEdge& e = g.edges[ix];
      bool down = u == e.above_face;
      int v = down ? e.below_face : e.above_face;
      // moving below a line loses its reds from w1 and gains its blues in w2
      int w1 = g.weights[u][0] + (down ? -e.red_mult : e.red_mult);
      int w2 = g.weights[u][1] + (down ? e.blue_mult : -e.blue_mult);
      if (g.weights[v][0] == -1 && g.weights[v][1] == -1) {
        g.weights[v] = {w1, w2};
        queue.push_back(v);
      } else if (g.weights[v][0] != w1 || g.weights[v][1] != w2) {
        throw InconsistentArrangementError(
            "cell would receive conflicting weights");
      }
    }
  }
  for (int f = 0; f < F; ++f)
    if (g.is_cell[f] && g.weights[f][0] == -1)
      throw InconsistentArrangementError("cell graph is not connected");
}

std::string dump_cell_weights(const CellGraph& g) {
  std::ostringstream os;
  for (size_t f = 0; f < g.weights.size(); ++f)
    if (g.is_cell[f])
      os << "w " << f << " " << g.weights[f][0] << " " << g.weights[f][1]
         << "\n";
  return os.str();
}

}  // namespace hullsep
