#include "toastkit/geom.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace toastkit {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.n(); ++i) {
    if (i) os << ' ';
    os << p[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(Topology t) {
  return t == Topology::HardBoundary ? "hard" : "torus";
}

Topology topology_from_string(const std::string& s) {
  if (s == "hard") return Topology::HardBoundary;
  if (s == "torus") return Topology::Torus;
  throw UsageError("unknown topology: " + s);
}

Box::Box(Point lo_, Point hi_, Topology t)
    : lo(std::move(lo_)), hi(std::move(hi_)), topology(t) {
  if (lo.n() != hi.n() || lo.n() == 0) throw UsageError("box dimension mismatch");
  for (int i = 0; i < n(); ++i) {
    if (lo[i] > hi[i]) throw UsageError("empty box axis");
    if (topology == Topology::Torus && extent(i) < 3)
      throw UsageError("torus axis period must be at least 3");
  }
}

i64 Box::cell_count() const {
  i64 total = 1;
  for (int i = 0; i < n(); ++i) total = checked_mul(total, extent(i));
  return total;
}

bool Box::contains_raw(const Point& p) const {
  if (p.n() != n()) throw UsageError("point dimension mismatch");
  for (int i = 0; i < n(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

Point Box::wrap(const Point& p) const {
  if (topology == Topology::HardBoundary) return p;
  Point r = p;
  for (int i = 0; i < n(); ++i) {
    const i64 period = extent(i);
    i64 off = (r[i] - lo[i]) % period;
    if (off < 0) off += period;
    r[i] = lo[i] + off;
  }
  return r;
}

i64 Box::index(const Point& p) const {
  Point q = topology == Topology::Torus ? wrap(p) : p;
  if (!contains_raw(q)) throw UsageError("point outside box: " + to_string(p));
  i64 idx = 0;
  for (int i = 0; i < n(); ++i) idx = idx * extent(i) + (q[i] - lo[i]);
  return idx;
}

Point Box::point_at(i64 idx) const {
  Point p = lo;
  for (int i = n() - 1; i >= 0; --i) {
    const i64 e = extent(i);
    p[i] = lo[i] + idx % e;
    idx /= e;
  }
  return p;
}

Rect::Rect(Point lo_, Point hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.n() != hi.n() || lo.n() == 0) throw UsageError("rect dimension mismatch");
  for (int i = 0; i < n(); ++i)
    if (lo[i] > hi[i]) throw UsageError("empty rect axis");
  clipped.assign(static_cast<size_t>(n()), {false, false});
}

i64 Rect::cell_count() const {
  i64 total = 1;
  for (int i = 0; i < n(); ++i) total = checked_mul(total, extent(i));
  return total;
}

i64 Rect::max_side() const {
  i64 m = 0;
  for (int i = 0; i < n(); ++i) m = std::max(m, side(i));
  return m;
}

bool Rect::contains(const Point& p) const {
  for (int i = 0; i < n(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

bool Rect::any_clipped() const {
  for (const auto& c : clipped)
    if (c[0] || c[1]) return true;
  return false;
}

std::string to_string(const Rect& r) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < r.n(); ++i) {
    if (i) os << " x ";
    os << r.lo[i] << ".." << r.hi[i];
    if (r.clipped[static_cast<size_t>(i)][0]) os << "<";
    if (r.clipped[static_cast<size_t>(i)][1]) os << ">";
  }
  os << ']';
  return os.str();
}

i64 l1_dist(const Point& p, const Point& q) {
  if (p.n() != q.n()) throw UsageError("l1_dist dimension mismatch");
  i64 d = 0;
  for (int i = 0; i < p.n(); ++i) {
    const i64 diff = p[i] >= q[i] ? checked_sub(p[i], q[i]) : checked_sub(q[i], p[i]);
    d = checked_add(d, diff);
  }
  return d;
}

i64 l1_dist(const Point& p, const Point& q, const Box& box) {
  if (p.n() != q.n()) throw UsageError("l1_dist dimension mismatch");
  if (box.topology == Topology::HardBoundary) return l1_dist(p, q);
  i64 d = 0;
  for (int i = 0; i < p.n(); ++i) {
    const i64 period = box.extent(i);
    i64 diff = (p[i] - q[i]) % period;
    if (diff < 0) diff += period;
    d = checked_add(d, std::min(diff, period - diff));
  }
  return d;
}

std::vector<Point> neighbors(const Point& p, const Box& box) {
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(2 * box.n()));
  for (int i = 0; i < box.n(); ++i) {
    for (i64 step : {i64{-1}, i64{1}}) {
      Point q = p;
      q[i] += step;
      if (box.topology == Topology::Torus) {
        out.push_back(box.wrap(q));
      } else if (box.contains_raw(q)) {
        out.push_back(q);
      }
    }
  }
  return out;
}

namespace {

// Emits the cells of one (n-1)-dimensional face of r, skipping cells that an
// earlier face in (axis, side) order already emitted. Face order: axis 0 low,
// axis 0 high, axis 1 low, ...
template <class F>
void walk_face(const Rect& r, int axis, int side, F&& emit) {
  const int n = r.n();
  Point p = r.lo;
  p[axis] = side == 0 ? r.lo[axis] : r.hi[axis];
  for (;;) {
    bool seen_earlier = false;
    bool reached_self = false;
    for (int j = 0; j < n && !seen_earlier && !reached_self; ++j) {
      for (int s = 0; s < 2; ++s) {
        if (j == axis && s == side) {
          reached_self = true;
          break;
        }
        if (r.clipped[static_cast<size_t>(j)][static_cast<size_t>(s)]) continue;
        const i64 face_coord = s == 0 ? r.lo[j] : r.hi[j];
        if (p[j] == face_coord) {
          seen_earlier = true;
          break;
        }
      }
    }
    if (!seen_earlier) emit(p);
    int i = n - 1;
    for (;;) {
      if (i < 0) return;
      if (i == axis) {
        --i;
        continue;
      }
      if (p[i] == r.hi[i]) {
        p[i] = r.lo[i];
        --i;
      } else {
        ++p[i];
        break;
      }
    }
  }
}

}  // namespace

std::vector<Point> rect_boundary(const Rect& r) {
  std::vector<Point> out;
  for (int i = 0; i < r.n(); ++i) {
    for (int s = 0; s < 2; ++s) {
      if (r.clipped[static_cast<size_t>(i)][static_cast<size_t>(s)]) continue;
      if (s == 1 && r.lo[i] == r.hi[i] &&
          !r.clipped[static_cast<size_t>(i)][0]) {
        continue;  // degenerate axis: low and high faces coincide
      }
      walk_face(r, i, s, [&](const Point& p) { out.push_back(p); });
    }
  }
  return out;
}

std::vector<Point> rect_outer_boundary(const Rect& r) {
  std::vector<Point> out;
  const int n = r.n();
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < 2; ++s) {
      if (r.clipped[static_cast<size_t>(i)][static_cast<size_t>(s)]) continue;
      // Slab of cells one step past this face; slabs of distinct faces never
      // collide, so no dedup is needed.
      Point p = r.lo;
      p[i] = s == 0 ? checked_sub(r.lo[i], 1) : checked_add(r.hi[i], 1);
      for (;;) {
        out.push_back(p);
        int j = n - 1;
        for (;;) {
          if (j < 0) goto next_face;
          if (j == i) {
            --j;
            continue;
          }
          if (p[j] == r.hi[j]) {
            p[j] = r.lo[j];
            --j;
          } else {
            ++p[j];
            break;
          }
        }
      }
    next_face:;
    }
  }
  return out;
}

i64 set_dist(const std::vector<Point>& a, const std::vector<Point>& b,
             const Box& box) {
  if (a.empty() || b.empty()) return kInfDist;
  i64 best = kInfDist;
  for (const Point& p : a) {
    for (const Point& q : b) {
      best = std::min(best, l1_dist(p, q, box));
      if (best == 0) return 0;
    }
  }
  return best;
}

i64 point_to_rect_boundary_dist(const Point& p, const Rect& r) {
  if (r.any_clipped())
    throw UsageError("point_to_rect_boundary_dist requires an unclipped rect");
  i64 outside = 0;
  i64 inside_min = kInfDist;
  bool inside = true;
  for (int i = 0; i < r.n(); ++i) {
    if (p[i] < r.lo[i]) {
      outside = checked_add(outside, checked_sub(r.lo[i], p[i]));
      inside = false;
    } else if (p[i] > r.hi[i]) {
      outside = checked_add(outside, checked_sub(p[i], r.hi[i]));
      inside = false;
    } else {
      inside_min = std::min(inside_min, std::min(p[i] - r.lo[i], r.hi[i] - p[i]));
    }
  }
  return inside ? inside_min : outside;
}

namespace {

// A face of a rect: the rect's interval product with one axis pinned.
struct Face {
  Point lo, hi;
};

std::vector<Face> faces_of(const Rect& r) {
  std::vector<Face> out;
  for (int i = 0; i < r.n(); ++i) {
    for (int s = 0; s < 2; ++s) {
      if (r.clipped[static_cast<size_t>(i)][static_cast<size_t>(s)]) continue;
      Face f{r.lo, r.hi};
      const i64 v = s == 0 ? r.lo[i] : r.hi[i];
      f.lo[i] = v;
      f.hi[i] = v;
      out.push_back(std::move(f));
    }
  }
  return out;
}

// Minimum L1 distance between two interval products, axis-separable.
i64 slab_dist(const Face& a, const Face& b, const std::vector<i64>& shift) {
  i64 d = 0;
  for (int i = 0; i < a.lo.n(); ++i) {
    const i64 s = shift[static_cast<size_t>(i)];
    const i64 alo = checked_add(a.lo[i], s), ahi = checked_add(a.hi[i], s);
    if (alo > b.hi[i])
      d = checked_add(d, checked_sub(alo, b.hi[i]));
    else if (b.lo[i] > ahi)
      d = checked_add(d, checked_sub(b.lo[i], ahi));
  }
  return d;
}

}  // namespace

i64 rect_boundary_dist(const Rect& a, const Rect& b, const Box& box) {
  // The boundary is the union of the unclipped faces, so the set distance is
  // the minimum over face pairs, each an axis-separable box distance.
  const std::vector<Face> fa = faces_of(a);
  const std::vector<Face> fb = faces_of(b);
  if (fa.empty() || fb.empty()) return kInfDist;
  const int n = box.n();

  std::vector<std::vector<i64>> shifts;
  if (box.topology == Topology::HardBoundary) {
    shifts.emplace_back(static_cast<size_t>(n), 0);
  } else {
    std::vector<int> k(static_cast<size_t>(n), -1);
    for (;;) {
      std::vector<i64> s(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        s[static_cast<size_t>(i)] =
            static_cast<i64>(k[static_cast<size_t>(i)]) * box.extent(i);
      shifts.push_back(std::move(s));
      int i = n - 1;
      while (i >= 0 && k[static_cast<size_t>(i)] == 1) {
        k[static_cast<size_t>(i)] = -1;
        --i;
      }
      if (i < 0) break;
      ++k[static_cast<size_t>(i)];
    }
  }

  i64 best = kInfDist;
  for (const auto& s : shifts)
    for (const Face& x : fa)
      for (const Face& y : fb) {
        best = std::min(best, slab_dist(x, y, s));
        if (best == 0) return 0;
      }
  return best;
}

}  // namespace toastkit
