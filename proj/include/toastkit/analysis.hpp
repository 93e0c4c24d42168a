#pragma once

// Structural diagnostics over labelings and toasts: recovering rectangle
// shapes from red components, bad-edge parity on unit 4-cycles, connectivity
// of the far-green region on tori, and containment statistics against the
// analytic expectation bound.

#include <array>
#include <vector>

#include "toastkit/toast.hpp"

namespace toastkit {

struct RedStructure {
  int component_id = 0;
  // finite: unclipped product of intervals (a full rectangle in view);
  // otherwise the shape runs off the box edge on the clipped sides.
  bool finite = false;
  Rect shape;
};

// For each connected red component, floods the component's enclosing region
// in the grid with red-blue edges deleted and fits the flooded set as a
// product of intervals, clipped where it touches the box edge.
std::vector<RedStructure> extract_red_structure(const Labeling& f, i64 q);

struct FourCycleResult {
  bool ok = true;
  std::array<Point, 4> cycle;  // a witness cycle when !ok
};

// Every unit 4-cycle must cross an even number of red-blue edges.
FourCycleResult four_cycle_parity_check(const Labeling& f);

struct HexResult {
  bool ok = true;
  Point a, b;  // disconnected witness cells when !ok
};

// Torus only: green cells at distance >= 2 from the piece union must all lie
// in one connected component of the green subgraph.
HexResult hex_connectivity_check(const Toast& t);

// Truncation of (sum over N >= 1 of N * rho^N)^n with rho =
// (1-epsilon)^(1/d_size^2); the geometric tail past n_max is added in closed
// form and reported through tail_out (contribution before the n-th power).
double containment_bound(int n, double epsilon, i64 d_size, i64 n_max,
                         double* tail_out = nullptr);

struct ContainmentStats {
  double mean = 0;
  i64 max = 0;
  std::vector<i64> histogram;  // histogram[k] = cells inside exactly k pieces
};

ContainmentStats containment_stats(const Toast& t);

}  // namespace toastkit
