#include "toastkit/coloring.hpp"

#include <algorithm>
#include <deque>

namespace toastkit {

PartialColoring partial_two_color(const Grid<char>& mask) {
  const Box& box = mask.box;
  PartialColoring out(box);
  std::vector<char> seen(mask.v.size(), 0);
  std::deque<std::pair<i64, char>> queue;  // cell index, parity color
  // Index order is lexicographic order, so the first unseen cell of each
  // component is its lexicographically least cell.
  for (i64 root = 0; root < mask.size(); ++root) {
    if (!mask.v[(size_t)root] || seen[(size_t)root]) continue;
    seen[(size_t)root] = 1;
    queue.emplace_back(root, '0');
    while (!queue.empty()) {
      auto [idx, color] = queue.front();
      queue.pop_front();
      out.values[(size_t)idx] = color;
      const Point p = box.point_at(idx);
      for (const Point& nb : neighbors(p, box)) {
        const i64 nidx = box.index(nb);
        if (!mask.v[(size_t)nidx] || seen[(size_t)nidx]) continue;
        seen[(size_t)nidx] = 1;
        queue.emplace_back(nidx, color == '0' ? '1' : '0');
      }
    }
  }
  return out;
}

PartialColoring partial_two_color(const std::vector<Point>& mask,
                                  const Box& box) {
  Grid<char> dense(box, 0);
  for (const Point& p : mask) dense.at(p) = 1;
  return partial_two_color(dense);
}

bool c_separated(const PartialColoring& c, const Point& x, const Point& y) {
  const Box& box = c.box;
  auto in_dom = [&](const Point& p) { return c.at(p) != ' '; };
  if (!in_dom(x) || !in_dom(y)) return false;
  const i64 target = box.index(y);
  if (box.index(x) == target) return false;
  std::vector<char> seen((size_t)box.cell_count(), 0);
  std::deque<Point> queue = {box.topology == Topology::Torus ? box.wrap(x) : x};
  seen[(size_t)box.index(x)] = 1;
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    for (const Point& nb : neighbors(p, box)) {
      const i64 nidx = box.index(nb);
      if (seen[(size_t)nidx] || !in_dom(nb)) continue;
      if (nidx == target) return false;
      seen[(size_t)nidx] = 1;
      queue.push_back(nb);
    }
  }
  return true;
}

Labeling assemble_crt(const Toast& t) {
  if (!t.validated) throw UsageError("assemble_crt requires a validated toast");
  if (t.q < 4) throw UsageError("assemble_crt requires q >= 4");
  const Box& box = t.box;
  if (box.topology == Topology::Torus)
    for (int i = 0; i < box.n(); ++i)
      if (box.extent(i) % 2 != 0)
        throw UsageError("parity fallback needs even torus periods");

  const Labeling base = label_from_toast(t);
  Grid<char> covered(box, 0);
  for (const Rect& r : t.pieces) {
    Box cells(r.lo, r.hi);
    for_each_point(cells, [&](const Point& p) { covered.at(p) = 1; });
  }

  Grid<char> inside_green(box, 0);
  for (size_t i = 0; i < base.cells.size(); ++i)
    if (base.cells[i] == 'G' && covered.v[i]) inside_green.v[i] = 1;
  const PartialColoring inner = partial_two_color(inside_green);

  Labeling f(box, "RB01", '0');
  for_each_point(box, [&](const Point& p) {
    const size_t idx = (size_t)box.index(p);
    const char b = base.cells[idx];
    if (b != 'G') {
      f.cells[idx] = b;
    } else if (inside_green.v[idx]) {
      f.cells[idx] = inner.values[idx];
    } else {
      i64 sum = 0;
      for (int i = 0; i < box.n(); ++i) sum += p[i];
      f.cells[idx] = (sum % 2 + 2) % 2 ? '1' : '0';
    }
  });
  return f;
}

std::pair<std::vector<Point>, std::vector<Point>> d_regions(const Rect& K) {
  if (K.n() != 2) throw UsageError("staircase regions are planar");
  if (K.any_clipped()) throw UsageError("staircase regions need unclipped rects");
  const i64 a = K.side(0), b = K.side(1);
  std::vector<Point> d1, d2;
  for (i64 i = 0; i <= b; ++i)
    for (i64 tt = 0; tt <= b - i; ++tt)
      d1.push_back(Point{K.lo[0] - 1 - i, K.lo[1] + tt});
  for (i64 i = 0; i <= a; ++i)
    for (i64 tt = 0; tt <= a - i; ++tt)
      d2.push_back(Point{K.lo[0] + tt, K.lo[1] - 1 - i});
  return {std::move(d1), std::move(d2)};
}

CrtPlus assemble_crt_plus(const Toast& t) {
  if (!t.validated)
    throw UsageError("assemble_crt_plus requires a validated toast");
  if (t.box.n() != 2) throw UsageError("staircase assembly is planar");
  if (!t.big_gap)
    throw UsageError("assemble_crt_plus needs the big-gap certificate");
  CrtPlus out{assemble_crt(t), Labeling(t.box, "01", '0'),
              Labeling(t.box, "01", '0')};
  Labeling* hs[2] = {&out.h1, &out.h2};
  // Staircase cells are written directly; materializing d_regions would
  // allocate (side+1)(side+2)/2 points per piece.
  auto mark = [&](Labeling& h, const Point& p) {
    if (t.box.topology == Topology::HardBoundary && !t.box.contains_raw(p))
      return;  // staircases past the box edge are clipped away
    h.set(p, '1');
  };
  for (const Rect& K : t.pieces) {
    const i64 a = K.side(0), b = K.side(1);
    for (i64 i = 0; i <= b; ++i)
      for (i64 s = 0; s <= b - i; ++s)
        mark(out.h1, Point{K.lo[0] - 1 - i, K.lo[1] + s});
    for (i64 i = 0; i <= a; ++i)
      for (i64 s = 0; s <= a - i; ++s)
        mark(out.h2, Point{K.lo[0] + s, K.lo[1] - 1 - i});
  }
  return out;
}

}  // namespace toastkit
