#pragma once

#include <string>
#include <vector>

#include "hullsep/geometry.hpp"

namespace hullsep {

// One distinct line y = slope*x + y0 of the dual arrangement. Coincident
// dual lines (coincident input points) are collapsed here and carry color
// multiplicities instead.
struct ArrangementLine {
  Rat slope;
  Rat y0;
  int red_mult = 0;
  int blue_mult = 0;
  std::vector<int> source_point_ids;  // sorted

  Rat value_at(const Rat& x) const { return slope * x + y0; }
};

struct ArrVertex {
  Point pos;
};

// Standard DCEL half-edge. `face` is the face on the left of origin->target.
struct HalfEdge {
  int origin = -1;
  int twin = -1;
  int next = -1;
  int prev = -1;
  int face = -1;
  int line = -1;  // index into Arrangement::lines, or -1 for box edges

  int target(const std::vector<HalfEdge>& hs) const { return hs[twin].origin; }
};

struct ArrFace {
  int edge = -1;  // one half-edge of the single boundary cycle
  bool outer = false;
};

// The dual-line arrangement clipped to the square [-box, box]^2. The box is
// chosen strictly beyond every line-pair intersection and every line's axis
// intercepts, so bounded faces biject with the cells of the full arrangement
// (the unbounded cells become boxed boundary faces).
struct Arrangement {
  std::vector<ArrangementLine> lines;
  std::vector<ArrVertex> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<ArrFace> faces;
  Rat box;
  int outer_face = -1;
  int total_red = 0;   // multiplicity-weighted
  int total_blue = 0;

  int num_cells() const {
    return static_cast<int>(faces.size()) - 1;  // all faces but the outer one
  }
};

// Builds the clipped DCEL. Requires a nonempty dual list; duplicates allowed.
Arrangement build_arrangement(const std::vector<DualLine>& duals);

// The cell containing (x, +inf) for every x: the face above the upper
// envelope of all lines. Returns its face id.
int upper_envelope_start(const Arrangement& arr);

// An exact rational point strictly interior to the given bounded face; it
// lies on no arrangement line.
Point representative_point(const Arrangement& arr, int face);

// CCW vertex ids of a bounded face's boundary cycle, starting from its
// stored edge.
std::vector<int> face_cycle(const Arrangement& arr, int face);

// Deterministic text form: vertices, per-face cycles, line table.
std::string dump_arrangement(const Arrangement& arr);

}  // namespace hullsep
