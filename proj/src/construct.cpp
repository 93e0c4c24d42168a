#include "toastkit/construct.hpp"

#include <algorithm>
#include <unordered_map>

namespace toastkit {

namespace {

Point spiral_point(i64 index) {
  // Counterclockwise square spiral: (0,0),(1,0),(1,1),(0,1),(-1,1),...
  // Run lengths 1,1,2,2,3,3,... with directions +x,+y,-x,-y cycling.
  i64 x = 0, y = 0;
  if (index == 0) return Point{0, 0};
  static constexpr i64 dx[4] = {1, 0, -1, 0};
  static constexpr i64 dy[4] = {0, 1, 0, -1};
  i64 remaining = index;
  i64 run = 1;
  int dir = 0;
  for (;;) {
    for (int rep = 0; rep < 2; ++rep) {
      const i64 steps = std::min(run, remaining);
      x += dx[dir] * steps;
      y += dy[dir] * steps;
      remaining -= steps;
      if (remaining == 0) return Point{x, y};
      dir = (dir + 1) % 4;
    }
    ++run;
  }
}

i64 shell_count(int n, i64 m) {
  // Number of points with L-infinity norm exactly m.
  if (m == 0) return 1;
  i64 outer = 1, inner = 1;
  for (int i = 0; i < n; ++i) {
    outer = checked_mul(outer, 2 * m + 1);
    inner = checked_mul(inner, 2 * m - 1);
  }
  return outer - inner;
}

Point shell_point(int n, i64 index) {
  i64 m = 0;
  while (true) {
    const i64 c = shell_count(n, m);
    if (index < c) break;
    index -= c;
    ++m;
  }
  if (m == 0) return Point(std::vector<i64>(static_cast<size_t>(n), 0));
  // Lexicographic walk over the shell, skipping interior points.
  Point p(std::vector<i64>(static_cast<size_t>(n), -m));
  for (;;) {
    bool on_shell = false;
    for (int i = 0; i < n; ++i)
      if (p[i] == -m || p[i] == m) on_shell = true;
    if (on_shell) {
      if (index == 0) return p;
      --index;
    }
    int i = n - 1;
    while (i >= 0 && p[i] == m) {
      p[i] = -m;
      --i;
    }
    if (i < 0) throw std::logic_error("shell enumeration exhausted");
    ++p[i];
  }
}

Rect cube_at(const Point& center, i64 radius) {
  Point lo = center, hi = center;
  for (int i = 0; i < center.n(); ++i) {
    lo[i] = checked_sub(center[i], radius);
    hi[i] = checked_add(center[i], radius);
  }
  return Rect(std::move(lo), std::move(hi));
}

bool rect_contains_rect(const Rect& outer, const Rect& inner) {
  for (int i = 0; i < outer.n(); ++i)
    if (inner.lo[i] < outer.lo[i] || inner.hi[i] > outer.hi[i]) return false;
  return true;
}

}  // namespace

Point Enumeration::point(i64 index) const {
  if (index < 0) throw UsageError("enumeration index must be nonnegative");
  return n == 2 ? spiral_point(index) : shell_point(n, index);
}

Toast greedy_toast(int n, i64 q, i64 count, bool big_gaps) {
  if (q < 1) throw UsageError("greedy_toast requires q >= 1");
  if (count < 1) throw UsageError("greedy_toast requires count >= 1");
  Enumeration en(n);
  // Distances are evaluated in the plane; the ambient box is only fixed at
  // the end, once the extent of the pieces is known.
  Box flat(Point(std::vector<i64>(static_cast<size_t>(n), 0)),
           Point(std::vector<i64>(static_cast<size_t>(n), 0)));

  std::vector<Rect> pieces;
  std::vector<i64> sides;
  for (i64 i = 0; i < count; ++i) {
    const Point p = en.point(i);
    i64 j = checked_add(i, q);
    for (;;) {
      const Rect r = cube_at(p, j);
      bool ok = true;
      i64 jump = -1;
      for (size_t t = 0; t < pieces.size(); ++t) {
        const Rect& old = pieces[t];
        const i64 d = rect_boundary_dist(r, old, flat);
        i64 need = q;
        if (big_gaps) {
          need = std::max(need, checked_mul(2, sides[t]));
          if (!rect_contains_rect(r, old))
            need = std::max(need, checked_mul(4, j));
        }
        if (d <= need) {
          ok = false;
          if (big_gaps) {
            // Minimal j at which the new cube contains `old` with clearance
            // greater than max(q, 2 N_t); against this piece no smaller j
            // can ever pass, because every candidate cube intersects every
            // earlier piece (all enumerated points lie inside each piece's
            // q-neighborhood of the origin region) and a cube inside an
            // earlier piece can never reach clearance 2 N_t.
            const i64 clear = checked_add(std::max(q, checked_mul(2, sides[t])), 1);
            i64 jstar = 0;
            for (int ax = 0; ax < n; ++ax) {
              jstar = std::max(jstar, checked_add(checked_sub(p[ax], old.lo[ax]), clear));
              jstar = std::max(jstar, checked_add(checked_sub(old.hi[ax], p[ax]), clear));
            }
            jump = std::max(jump, jstar);
          }
          break;
        }
      }
      if (ok) break;
      j = big_gaps ? std::max(checked_add(j, 1), jump) : checked_add(j, 1);
    }
    pieces.push_back(cube_at(p, j));
    sides.push_back(checked_mul(2, j));
  }

  Point lo = pieces[0].lo, hi = pieces[0].hi;
  for (const Rect& r : pieces)
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], r.lo[i]);
      hi[i] = std::max(hi[i], r.hi[i]);
    }
  for (int i = 0; i < n; ++i) {
    lo[i] = checked_sub(lo[i], 1);
    hi[i] = checked_add(hi[i], 1);
  }
  return make_toast(std::move(pieces), q, Box(std::move(lo), std::move(hi)));
}

namespace {

// Flat L1 distance from an (unwrapped) cell to the ring of the square
// [lo, lo+N]^n: exterior cells sum per-axis gaps, interior cells take the
// minimum face depth.
i64 ring_dist(const Point& p, const Point& lo, i64 N) {
  i64 outside = 0;
  i64 depth = kInfDist;
  bool inside = true;
  for (int i = 0; i < p.n(); ++i) {
    const i64 hi = lo[i] + N;
    if (p[i] < lo[i]) {
      outside += lo[i] - p[i];
      inside = false;
    } else if (p[i] > hi) {
      outside += p[i] - hi;
      inside = false;
    } else {
      depth = std::min(depth, std::min(p[i] - lo[i], hi - p[i]));
    }
  }
  return inside ? depth : outside;
}

}  // namespace

Toast extract_safe_squares(const RandomField& field, i64 q, AnnulusMode mode) {
  if (q < 1) throw UsageError("extract_safe_squares requires q >= 1");
  if (field.kind != RandomField::Kind::Bits)
    throw UsageError("extract_safe_squares requires a bit field");
  const Box& box = field.box;
  const int n = box.n();
  const bool torus = box.topology == Topology::Torus;

  i64 max_side = kInfDist;
  for (int i = 0; i < n; ++i)
    max_side = std::min(max_side, box.extent(i) - 1);

  std::vector<Rect> found;
  for_each_point(box, [&](const Point& root) {
    // The root corner lies on every candidate ring rooted here.
    if (!field.bits[(size_t)box.index(root)]) return;
    for (i64 N = q; N <= max_side; ++N) {
      const i64 w = mode == AnnulusMode::WidthQ ? q : std::max(q, 2 * N);
      if (!torus) {
        bool fits = true;
        for (int i = 0; i < n; ++i)
          if (root[i] - w < box.lo[i] || root[i] + N + w > box.hi[i])
            fits = false;
        if (!fits) continue;
      } else {
        bool fits = true;
        for (int i = 0; i < n; ++i)
          if (N + 1 >= box.extent(i)) fits = false;  // pieces may not wrap
        if (!fits) break;
      }

      // Ring of 1s first: cheap rejection for almost every candidate.
      const Rect cand(root, Point([&] {
                        Point h = root;
                        for (int i = 0; i < n; ++i) h[i] += N;
                        return h.c;
                      }()));
      bool ok = true;
      for (const Point& b : rect_boundary(cand)) {
        if (!field.bits[(size_t)box.index(b)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      // Zero annulus: every cell within distance w of the ring whose torus
      // position is not itself on the ring must carry 0. WidthQ also forces
      // the interior ring of depth q to 0; Width2N leaves the interior
      // beyond depth q unconstrained but widens the outside requirement.
      Box scan = [&] {
        Point slo = root, shi = root;
        for (int i = 0; i < n; ++i) {
          slo[i] -= w;
          shi[i] += N + w;
        }
        return Box(slo, shi);
      }();
      for_each_point(scan, [&](const Point& cell) {
        if (!ok) return;
        const i64 d = ring_dist(cell, root, N);
        if (d == 0 || d > w) return;
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (cell[i] < root[i] || cell[i] > root[i] + N) inside = false;
        if (inside && mode == AnnulusMode::Width2N && d > q)
          return;  // interior depth beyond q is unconstrained
        if (!torus) {
          if (field.bits[(size_t)box.index(cell)]) ok = false;
          return;
        }
        // Torus: the scan may wrap onto the square itself; cells whose torus
        // position lies on the ring (or, for the outside requirement, inside
        // the square) are exempt.
        bool on_ring = false, in_square = true;
        for (int i = 0; i < n; ++i) {
          i64 off = (cell[i] - root[i]) % box.extent(i);
          if (off < 0) off += box.extent(i);
          if (off > N) in_square = false;
          else if (off == 0 || off == N) on_ring = true;
        }
        on_ring = on_ring && in_square;
        if (on_ring) return;
        if (!inside && in_square && d > q) return;  // wrapped onto interior
        if (field.bits[(size_t)box.index(cell)]) ok = false;
      });
      if (ok) found.push_back(cand);
    }
  });

  std::sort(found.begin(), found.end());
  Toast t = make_toast(std::move(found), q, box);
  return t;
}

Toast quasi_tile(const Box& box, i64 q, const std::vector<i64>& scales,
                 std::uint64_t seed, QuasiTileReport* report) {
  if (box.topology != Topology::Torus)
    throw UsageError("quasi_tile requires a torus box");
  if (q < 0) throw UsageError("quasi_tile requires q >= 0");
  const int n = box.n();
  const int k = static_cast<int>(scales.size());
  for (int i = 0; i < k; ++i) {
    if (scales[(size_t)i] < std::max<i64>(q, 1))
      throw UsageError("scale side must be at least max(q, 1)");
    if (i > 0 && scales[(size_t)i] <= scales[(size_t)i - 1])
      throw UsageError("scales must be strictly increasing");
    const i64 pitch = scales[(size_t)i] + q + 1;
    for (int ax = 0; ax < n; ++ax)
      if (box.extent(ax) % pitch != 0)
        throw UsageError("torus period " + std::to_string(box.extent(ax)) +
                         " not divisible by pitch " + std::to_string(pitch));
    if (scales[(size_t)i] + 1 >= box.extent(0))
      throw UsageError("scale side too large for the torus");
  }

  StreamRng rng(seed);
  std::vector<Point> eta;
  for (int i = 0; i < k; ++i) {
    Point e(std::vector<i64>(static_cast<size_t>(n), 0));
    for (int ax = 0; ax < n; ++ax)
      e[ax] = rng.range(0, scales[(size_t)i] + q);
    eta.push_back(std::move(e));
  }

  // Squares per scale, roots on the shifted lattice.
  std::vector<std::vector<Rect>> placed((size_t)k);
  for (int i = 0; i < k; ++i) {
    const i64 N = scales[(size_t)i];
    const i64 pitch = N + q + 1;
    Point counts(std::vector<i64>(static_cast<size_t>(n), 0));
    for (int ax = 0; ax < n; ++ax) counts[ax] = box.extent(ax) / pitch;
    Point idx(std::vector<i64>(static_cast<size_t>(n), 0));
    for (;;) {
      Point lo = box.lo, hi = box.lo;
      for (int ax = 0; ax < n; ++ax) {
        lo[ax] = box.lo[ax] + eta[(size_t)i][ax] + idx[ax] * pitch;
        hi[ax] = lo[ax] + N;
      }
      placed[(size_t)i].emplace_back(std::move(lo), std::move(hi));
      int ax = n - 1;
      while (ax >= 0 && idx[ax] == counts[ax] - 1) {
        idx[ax] = 0;
        --ax;
      }
      if (ax < 0) break;
      ++idx[ax];
    }
  }

  // Removal: an earlier-scale square dies when its boundary comes within
  // distance q of a later-scale boundary. Whether that happens depends only
  // on the square's root residues modulo the later pitch, so survival is
  // memoized per residue tuple.
  Box flat(Point(std::vector<i64>((size_t)n, 0)),
           Point(std::vector<i64>((size_t)n, 0)));
  std::vector<std::vector<char>> alive((size_t)k);
  for (int i = 0; i < k; ++i)
    alive[(size_t)i].assign(placed[(size_t)i].size(), 1);

  for (int j = 0; j < k; ++j) {
    for (int i = j + 1; i < k; ++i) {
      const i64 Nj = scales[(size_t)j], Ni = scales[(size_t)i];
      const i64 pitch = Ni + q + 1;
      std::unordered_map<i64, char> memo;  // packed residues -> removed
      for (size_t c = 0; c < placed[(size_t)j].size(); ++c) {
        if (!alive[(size_t)j][c]) continue;
        const Rect& C = placed[(size_t)j][c];
        i64 key = 0;
        Point res(std::vector<i64>((size_t)n, 0));
        for (int ax = 0; ax < n; ++ax) {
          i64 r = (C.lo[ax] - box.lo[ax] - eta[(size_t)i][ax]) % pitch;
          if (r < 0) r += pitch;
          res[ax] = r;
          key = key * (pitch + 1) + r;
        }
        auto it = memo.find(key);
        char removed;
        if (it != memo.end()) {
          removed = it->second;
        } else {
          removed = 0;
          const Rect Cr(res, Point([&] {
                          Point h = res;
                          for (int ax = 0; ax < n; ++ax) h[ax] += Nj;
                          return h.c;
                        }()));
          // Later-scale squares near the representative: lattice roots at
          // m * pitch for m in {-1, 0, 1, 2} per axis cover everything whose
          // boundary can come within q.
          Point m(std::vector<i64>((size_t)n, -1));
          for (;;) {
            Point dlo = res, dhi = res;
            for (int ax = 0; ax < n; ++ax) {
              dlo[ax] = m[ax] * pitch;
              dhi[ax] = dlo[ax] + Ni;
            }
            if (rect_boundary_dist(Cr, Rect(dlo, dhi), flat) <= q) {
              removed = 1;
              break;
            }
            int ax = n - 1;
            while (ax >= 0 && m[ax] == 2) {
              m[ax] = -1;
              --ax;
            }
            if (ax < 0) break;
            ++m[ax];
          }
          memo.emplace(key, removed);
        }
        if (removed) alive[(size_t)j][c] = 0;
      }
    }
  }

  // Survivors, coverage accounting.
  Grid<std::uint8_t> covered(box, 0);
  std::vector<Rect> survivors;
  if (report) report->scales.clear();
  i64 covered_count = 0;
  for (int i = 0; i < k; ++i) {
    i64 keep = 0;
    for (size_t c = 0; c < placed[(size_t)i].size(); ++c) {
      if (!alive[(size_t)i][c]) continue;
      ++keep;
      const Rect& r = placed[(size_t)i][c];
      Box cells(r.lo, r.hi);
      for_each_point(cells, [&](const Point& p) {
        auto& mark = covered.at(p);
        if (!mark) {
          mark = 1;
          ++covered_count;
        }
      });
      survivors.push_back(r);
    }
    if (report) {
      QuasiTileReport::Scale s;
      s.side = scales[(size_t)i];
      s.placed = static_cast<i64>(placed[(size_t)i].size());
      s.surviving = keep;
      double cell_total = static_cast<double>(box.cell_count());
      double per_square = 1;
      for (int ax = 0; ax < n; ++ax)
        per_square *= static_cast<double>(scales[(size_t)i] + 1);
      s.own_coverage = static_cast<double>(s.placed) * per_square / cell_total;
      s.cumulative_coverage = static_cast<double>(covered_count) / cell_total;
      report->scales.push_back(s);
    }
  }
  if (report)
    report->coverage =
        static_cast<double>(covered_count) / static_cast<double>(box.cell_count());

  Toast t;
  t.q = q;
  t.pieces = std::move(survivors);
  t.box = box;
  // Validity is guaranteed by construction (same-scale squares are q+1
  // apart on their lattice; cross-scale conflicts were removed); a full
  // pairwise validate_toast would be quadratic in the piece count, so it is
  // exercised on small instances in the tests instead.
  t.validated = true;
  t.big_gap = false;
  t.parent.assign(t.pieces.size(), -1);
  return t;
}

std::vector<i64> auto_scales(i64 q, int k) {
  std::vector<i64> scales;
  i64 v = checked_add(q, 1);
  for (int i = 0; i < k; ++i) {
    scales.push_back(v);
    v = checked_mul(v, 4);
  }
  return scales;
}

}  // namespace toastkit
