#pragma once

// Integer-lattice geometry: points, boxes, axis-aligned rectangles, the L1
// metric, boundaries and adjacency. Everything here is a pure value type;
// operations never mutate their arguments.

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace toastkit {

using i64 = std::int64_t;

// Distance value standing in for "infinity" (empty infimum).
inline constexpr i64 kInfDist = std::numeric_limits<i64>::max();

// All arithmetic on coordinates is overflow-checked; silent wraparound is
// never acceptable for lattice geometry.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

struct Point {
  std::vector<i64> c;

  Point() = default;
  explicit Point(std::vector<i64> coords) : c(std::move(coords)) {}
  Point(std::initializer_list<i64> coords) : c(coords) {}

  int n() const { return static_cast<int>(c.size()); }
  i64& operator[](int i) { return c[static_cast<size_t>(i)]; }
  i64 operator[](int i) const { return c[static_cast<size_t>(i)]; }

  friend bool operator==(const Point& a, const Point& b) { return a.c == b.c; }
  friend bool operator!=(const Point& a, const Point& b) { return a.c != b.c; }
  friend bool operator<(const Point& a, const Point& b) { return a.c < b.c; }
};

std::string to_string(const Point& p);

enum class Topology { HardBoundary, Torus };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& s);

// Finite ambient domain. HardBoundary boxes are plain products of integer
// intervals; Torus boxes identify opposite faces (each axis period must be
// at least 3 so that adjacency stays simple).
struct Box {
  Point lo, hi;
  Topology topology = Topology::HardBoundary;

  Box() = default;
  Box(Point lo_, Point hi_, Topology t = Topology::HardBoundary);

  int n() const { return lo.n(); }
  i64 extent(int i) const { return hi[i] - lo[i] + 1; }
  i64 cell_count() const;

  // True iff the raw coordinates lie in [lo, hi] (no wrapping applied).
  bool contains_raw(const Point& p) const;
  // Torus: map p into [lo, hi] by reducing each axis mod its period.
  // HardBoundary: identity (caller must ensure containment).
  Point wrap(const Point& p) const;

  // Dense row-major cell index, last axis fastest. Wraps on a torus;
  // throws UsageError for out-of-box points on a HardBoundary box.
  i64 index(const Point& p) const;
  Point point_at(i64 idx) const;
};

// Axis-aligned product of integer intervals. The side length on axis i is
// hi[i] - lo[i] (so a single cell has side length 0 and occupies 1 cell).
// A clipped side marks a face that extends past the ambient domain: such a
// face contributes no boundary and no outer-boundary cells.
struct Rect {
  Point lo, hi;
  // clipped[i][0]: low side of axis i clipped; clipped[i][1]: high side.
  std::vector<std::array<bool, 2>> clipped;

  Rect() = default;
  Rect(Point lo_, Point hi_);

  int n() const { return lo.n(); }
  i64 side(int i) const { return checked_sub(hi[i], lo[i]); }
  i64 extent(int i) const { return checked_add(side(i), 1); }
  i64 cell_count() const;
  i64 max_side() const;
  bool contains(const Point& p) const;  // raw coordinates, no wrapping
  bool any_clipped() const;

  friend bool operator==(const Rect& a, const Rect& b) {
    return a.lo == b.lo && a.hi == b.hi && a.clipped == b.clipped;
  }
  friend bool operator<(const Rect& a, const Rect& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.clipped < b.clipped;
  }
};

std::string to_string(const Rect& r);

// L1 distance ignoring topology.
i64 l1_dist(const Point& p, const Point& q);
// L1 distance respecting the box topology (minimum over wrap representatives
// on a torus).
i64 l1_dist(const Point& p, const Point& q, const Box& box);

// Up-to-2n cells at L1 distance 1; HardBoundary drops out-of-box neighbors,
// Torus wraps.
std::vector<Point> neighbors(const Point& p, const Box& box);

// Cells of r adjacent to the complement of r. Clipped faces are treated as
// interior (the complement beyond them is considered part of the rect).
std::vector<Point> rect_boundary(const Rect& r);
// Cells outside r at L1 distance exactly 1 from r; empty along clipped faces.
std::vector<Point> rect_outer_boundary(const Rect& r);

// Minimum pairwise L1 distance between two point sets; kInfDist if either is
// empty. Exact brute-force double loop, topology-aware.
i64 set_dist(const std::vector<Point>& a, const std::vector<Point>& b,
             const Box& box);

// Closed-form L1 distance from a point to the boundary of an unclipped rect
// (flat geometry, no wrapping).
i64 point_to_rect_boundary_dist(const Point& p, const Rect& r);

// dist(boundary(a), boundary(b)) for unclipped rects, topology-aware.
// Agrees with set_dist over rect_boundary but runs in O(perimeter).
i64 rect_boundary_dist(const Rect& a, const Rect& b, const Box& box);

// Dense per-cell storage over a box. On a torus, at() wraps.
template <class T>
struct Grid {
  Box box;
  std::vector<T> v;

  Grid() = default;
  explicit Grid(const Box& b, T init = T())
      : box(b), v(static_cast<size_t>(b.cell_count()), init) {}

  T& at(const Point& p) { return v[static_cast<size_t>(box.index(p))]; }
  const T& at(const Point& p) const {
    return v[static_cast<size_t>(box.index(p))];
  }
  i64 size() const { return static_cast<i64>(v.size()); }
};

// Odometer-style iteration over all points of a box in index order.
template <class F>
void for_each_point(const Box& box, F&& f) {
  Point p = box.lo;
  const int n = box.n();
  for (;;) {
    f(p);
    int i = n - 1;
    while (i >= 0 && p[i] == box.hi[i]) {
      p[i] = box.lo[i];
      --i;
    }
    if (i < 0) break;
    ++p[i];
  }
}

}  // namespace toastkit
