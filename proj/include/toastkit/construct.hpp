#pragma once

// Toast construction algorithms: greedy enumeration-driven squares,
// safe-square extraction from random bit fields, and multi-scale
// random-shift quasi-tiling on tori.

#include <cstdint>
#include <vector>

#include "toastkit/rng.hpp"
#include "toastkit/toast.hpp"

namespace toastkit {

// Fixed computable enumeration of Z^n: index 0 is the origin; n = 2 uses a
// counterclockwise square spiral, other dimensions use L-infinity shells in
// increasing radius, lexicographic within a shell.
struct Enumeration {
  int n = 2;
  explicit Enumeration(int dim) : n(dim) {
    if (dim < 1) throw UsageError("enumeration dimension must be >= 1");
  }
  Point point(i64 index) const;
};

// Greedy square toast: for each index i, the square [-j, j]^n centered at
// the i-th enumerated point, with j the least integer >= i + q whose
// boundary keeps distance > q from all earlier boundaries. With big_gaps,
// additionally distance > max(q, 2 N_t) against every earlier square and
// distance > 4j against earlier squares not contained in the new one.
// Guarantees: side N_i = 2j >= 2(i+q); point i lies in its square; the
// output validates. The ambient box is the tight bounding box of the pieces
// (expanded by one cell so outer boundaries exist).
Toast greedy_toast(int n, i64 q, i64 count, bool big_gaps);

enum class AnnulusMode { WidthQ, Width2N };

// All squares K with side N >= q whose boundary cells carry bit 1 while
// every other cell at distance <= q from the boundary carries bit 0
// (Width2N: additionally every cell outside K at distance <= 2N carries
// bit 0). HardBoundary boxes only admit squares whose required annulus lies
// fully inside the box. The result validates with parameter q; Width2N
// results carry the big-gap certificate.
Toast extract_safe_squares(const RandomField& field, i64 q, AnnulusMode mode);

struct QuasiTileReport {
  // One entry per scale: squares placed, squares surviving removal,
  // coverage of that scale's own squares, cumulative coverage of survivors
  // up to and including the scale.
  struct Scale {
    i64 side = 0;
    i64 placed = 0;
    i64 surviving = 0;
    double own_coverage = 0;
    double cumulative_coverage = 0;
  };
  std::vector<Scale> scales;
  double coverage = 0;
};

// Multi-scale quasi-tiling of a torus: per scale i, N_i-squares rooted at
// the lattice (N_i+q+1) Z^n + eta_i with eta_i drawn from the seeded stream;
// then every earlier-scale square whose boundary comes within distance q of
// a later-scale boundary is removed. Requires every axis period to be
// divisible by N_i+q+1 and N_i >= q, with scales strictly increasing.
Toast quasi_tile(const Box& box, i64 q, const std::vector<i64>& scales,
                 std::uint64_t seed, QuasiTileReport* report = nullptr);

// The auto schedule N_i = (q+1) * 4^i for i < k.
std::vector<i64> auto_scales(i64 q, int k);

}  // namespace toastkit
