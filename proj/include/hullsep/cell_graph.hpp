#pragma once

#include <array>
#include <string>
#include <vector>

#include "hullsep/arrangement.hpp"

namespace hullsep {

// Adjacency between two cells across one line edge. Crossing from above_face
// to below_face moves below the line (and vice versa).
struct CellGraphEdge {
  int above_face = -1;
  int below_face = -1;
  int line = -1;
  int red_mult = 0;
  int blue_mult = 0;
};

// Cells are identified by their arrangement face id; the outer face is not
// a cell. weights[f] = {w1, w2} where w1 counts red lines strictly below any
// interior point of cell f and w2 counts blue lines strictly above it, both
// multiplicity-weighted. {-1, -1} marks an unassigned weight.
struct CellGraph {
  std::vector<CellGraphEdge> edges;
  std::vector<std::vector<int>> adj;  // face id -> incident edge indices
  std::vector<bool> is_cell;          // face id -> bounded face?
  std::vector<std::array<int, 2>> weights;
};

CellGraph build_cell_graph(const Arrangement& arr);

// Breadth-first weight assignment from the upper-envelope cell, which sees
// all total_red red lines below it and no blue line above it. Throws
// InconsistentArrangementError if any cell would receive two different
// weights or ends up unreachable.
void propagate_weights(CellGraph& g, int start, int total_red);

// Deterministic "w <face> <w1> <w2>" listing of all cell weights.
std::string dump_cell_weights(const CellGraph& g);

}  // namespace hullsep
