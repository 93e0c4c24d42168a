#pragma once

// Shared fixtures for the test binaries: seeded random toasts, windows, and
// the brute-force safe-square oracle.

#include <algorithm>
#include <set>

#include "toastkit/construct.hpp"
#include "toastkit/lcl.hpp"
#include "toastkit/rng.hpp"
#include "toastkit/toast.hpp"

namespace toastkit::testing {

// Oracle for safe squares: walk every candidate square, build its boundary
// explicitly, and grow a BFS ball of the required radius around it.
inline bool safe_square_oracle(const RandomField& field, const Rect& cand,
                               i64 q, AnnulusMode mode) {
  const Box& box = field.box;
  const i64 N = cand.side(0);
  const i64 w = mode == AnnulusMode::WidthQ ? q : std::max(q, 2 * N);
  std::set<Point> ring;
  for (const Point& p : rect_boundary(cand)) ring.insert(box.wrap(p));
  for (const Point& p : ring)
    if (!field.bits[(size_t)box.index(p)]) return false;

  std::set<Point> ball = ring;
  std::vector<Point> frontier(ring.begin(), ring.end());
  for (i64 step = 0; step < w; ++step) {
    std::vector<Point> next;
    for (const Point& p : frontier)
      for (const Point& nb : neighbors(p, box))
        if (ball.insert(nb).second) next.push_back(nb);
    for (const Point& p : next) {
      if (ring.count(p)) continue;
      bool inside = true;
      for (int i = 0; i < box.n(); ++i) {
        i64 off = (p[i] - cand.lo[i]) % box.extent(i);
        if (off < 0) off += box.extent(i);
        if (box.topology == Topology::HardBoundary) off = p[i] - cand.lo[i];
        if (off < 0 || off > N) inside = false;
      }
      if (inside && mode == AnnulusMode::Width2N && step + 1 > q)
        continue;  // deep interior is unconstrained in the wide mode
      if (field.bits[(size_t)box.index(p)]) return false;
    }
    frontier = std::move(next);
  }
  return true;
}

inline std::vector<Rect> safe_squares_brute(const RandomField& field, i64 q,
                                            AnnulusMode mode) {
  const Box& box = field.box;
  const int n = box.n();
  std::vector<Rect> out;
  i64 max_side = kInfDist;
  for (int i = 0; i < n; ++i) max_side = std::min(max_side, box.extent(i) - 1);
  for_each_point(box, [&](const Point& root) {
    for (i64 N = q; N <= max_side; ++N) {
      const i64 w = mode == AnnulusMode::WidthQ ? q : std::max(q, 2 * N);
      if (box.topology == Topology::HardBoundary) {
        bool fits = true;
        for (int i = 0; i < n; ++i)
          if (root[i] - w < box.lo[i] || root[i] + N + w > box.hi[i])
            fits = false;
        if (!fits) continue;
      } else {
        bool fits = true;
        for (int i = 0; i < n; ++i)
          if (N + 1 >= box.extent(i)) fits = false;
        if (!fits) break;
      }
      Point hi = root;
      for (int i = 0; i < n; ++i) hi[i] += N;
      Rect cand(root, hi);
      if (safe_square_oracle(field, cand, q, mode)) out.push_back(cand);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Rejection-sampled random toast: proposes axis-aligned rects (nesting
// allowed) and keeps those that stay valid against the accepted set. Pieces
// keep `margin` cells of clearance from a hard box edge so boundary and
// outer-boundary cells always exist in full.
inline Toast random_toast(StreamRng& rng, const Box& box, i64 q,
                          int proposals = 120, i64 max_side = 30,
                          i64 margin = 0) {
  const int n = box.n();
  std::vector<Rect> pieces;
  for (int attempt = 0; attempt < proposals; ++attempt) {
    Point lo = box.lo, hi = box.lo;
    bool fits = true;
    for (int i = 0; i < n; ++i) {
      const i64 side = rng.range(q, max_side);
      const i64 min_lo = box.lo[i] + margin;
      const i64 max_lo = box.hi[i] - margin - side;
      if (max_lo < min_lo) {
        fits = false;
        break;
      }
      lo[i] = rng.range(min_lo, max_lo);
      hi[i] = lo[i] + side;
    }
    if (!fits) continue;
    Rect cand(lo, hi);
    std::vector<Rect> with = pieces;
    with.push_back(cand);
    if (validate_toast(with, q, box).ok()) pieces = std::move(with);
  }
  return make_toast(std::move(pieces), q, box);
}

// Window cut from a labeling at the given anchor (low corner).
inline WindowAssignment window_at(const Labeling& f, const Point& anchor,
                                  i64 q) {
  WindowAssignment phi(f.box.n(), q);
  Box wbox(Point(std::vector<i64>((size_t)f.box.n(), 0)),
           Point(std::vector<i64>((size_t)f.box.n(), 2 * q)));
  for_each_point(wbox, [&](const Point& w) {
    Point cell = anchor;
    for (int i = 0; i < f.box.n(); ++i) cell[i] += w[i];
    phi.set(w, f.at(cell));
  });
  return phi;
}

inline WindowAssignment random_window(StreamRng& rng, int n, i64 q) {
  WindowAssignment phi(n, q);
  const char* labels = "RBG";
  for (char& v : phi.values) v = labels[rng.below(3)];
  return phi;
}

}  // namespace toastkit::testing
