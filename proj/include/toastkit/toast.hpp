#pragma once

// Toast data structure: a finite family of axis-aligned rectangles with a
// spacing parameter q. Validation checks the nesting condition (any two
// pieces disjoint or nested), the boundary-spacing condition
// dist(boundary K, boundary L) > q, and the minimum side length q.

#include <string>
#include <vector>

#include "toastkit/geom.hpp"

namespace toastkit {

// Dense label assignment over a box. Labels are single characters drawn from
// `alphabet` (e.g. "RBG", "RB01", "01_").
struct Labeling {
  Box box;
  std::string alphabet;
  std::vector<char> cells;

  Labeling() = default;
  Labeling(const Box& b, std::string alpha, char fill)
      : box(b),
        alphabet(std::move(alpha)),
        cells(static_cast<size_t>(b.cell_count()), fill) {}

  char at(const Point& p) const { return cells[(size_t)box.index(p)]; }
  void set(const Point& p, char v) { cells[(size_t)box.index(p)] = v; }
};

// One failed window or pointwise condition in a labeling check.
struct Violation {
  Point anchor;
  std::string tag;
  std::string reason;
};

struct ToastViolation {
  enum class Kind { Domain, SideLength, Nesting, Spacing };
  Kind kind;
  int i = -1, j = -1;  // offending piece indices (j = -1 for single-piece)
  std::string detail;
};

std::string to_string(ToastViolation::Kind k);

struct ToastReport {
  std::vector<ToastViolation> violations;
  // Nesting forest: parent[i] = index of the tightest enclosing piece, or -1.
  // Only meaningful when the nesting check passed.
  std::vector<int> parent;
  // Certified big-gap property: every non-nested pair keeps boundary distance
  // greater than twice the larger maximum side length, and every nested pair
  // greater than twice the inner piece's maximum side length.
  bool big_gap = false;

  bool ok() const { return violations.empty(); }
};

struct Toast {
  i64 q = 0;
  std::vector<Rect> pieces;
  Box box;
  bool validated = false;
  bool big_gap = false;
  std::vector<int> parent;
};

// Checks every piece and every pair; violations are data, not errors. The
// nesting and spacing conditions are verified independently even though the
// spacing condition implies nesting for rectangles in dimension >= 2 (used
// as a cross-check). Pieces must be unclipped.
ToastReport validate_toast(const std::vector<Rect>& pieces, i64 q,
                           const Box& box);

// Validates and wraps into a Toast; throws UsageError on any violation.
Toast make_toast(std::vector<Rect> pieces, i64 q, const Box& box);

// {R, B, G} labeling: R on piece boundaries, B on outer boundaries, G
// elsewhere. Requires q >= 1 so that no cell is both R and B.
Labeling label_from_toast(const Toast& t);

// Fraction of box cells covered by the union of pieces.
double coverage(const Toast& t);
i64 covered_cells(const Toast& t);

// Per-cell count of pieces containing the cell.
Grid<i64> containment_counts(const Toast& t);

}  // namespace toastkit
