#pragma once

// Partial proper 2-colorings and the assembly of refined labelings (and their
// staircase indicator layers) from validated toasts.

#include <vector>

#include "toastkit/toast.hpp"

namespace toastkit {

// Dense partial coloring: '0', '1', or ' ' (blank, outside the domain).
struct PartialColoring {
  Box box;
  std::vector<char> values;

  PartialColoring() = default;
  explicit PartialColoring(const Box& b)
      : box(b), values((size_t)b.cell_count(), ' ') {}

  char at(const Point& p) const { return values[(size_t)box.index(p)]; }
  void set(const Point& p, char v) { values[(size_t)box.index(p)] = v; }
};

// 2-colors each connected component of U by BFS parity from the
// lexicographically least cell of the component. Valid because grid graphs
// are bipartite; components must not wrap around a torus.
PartialColoring partial_two_color(const std::vector<Point>& mask,
                                  const Box& box);
// Same, with the domain given as a dense indicator (nonzero = in U).
PartialColoring partial_two_color(const Grid<char>& mask);

// True iff x and y both lie in dom(c) but in different components of the
// adjacency graph restricted to dom(c).
bool c_separated(const PartialColoring& c, const Point& x, const Point& y);

// Refined labeling over {R,B,0,1}: boundary labels from the toast, green
// cells inside the piece union 2-colored per component, green cells outside
// colored by coordinate-sum parity. Torus boxes need even periods (the
// parity fallback must close up around every seam).
Labeling assemble_crt(const Toast& t);

// The two triangular staircase regions hanging off the low-x and low-y faces
// of an unclipped planar rect. Sizes are (b+1)(b+2)/2 and (a+1)(a+2)/2 for
// side lengths a (axis 0) and b (axis 1).
std::pair<std::vector<Point>, std::vector<Point>> d_regions(const Rect& K);

struct CrtPlus {
  Labeling f;   // over RB01
  Labeling h1;  // over 01
  Labeling h2;  // over 01
};

// assemble_crt plus the indicator layers h_i = union of the i-th staircase
// regions over all pieces. Requires the toast's big-gap certificate, which
// keeps staircases of distinct pieces disjoint and clear of red cells.
CrtPlus assemble_crt_plus(const Toast& t);

}  // namespace toastkit
