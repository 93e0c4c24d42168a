#include "toastkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace toastkit {

namespace {

bool bad_edge(char a, char b) {
  return (a == 'R' && b == 'B') || (a == 'B' && b == 'R');
}

}  // namespace

std::vector<RedStructure> extract_red_structure(const Labeling& f, i64 q) {
  if (f.alphabet != "RBG") throw UsageError("structure extraction needs RBG");
  if (q < 1) throw UsageError("structure extraction needs q >= 1");
  const Box& box = f.box;
  const int n = box.n();
  std::vector<RedStructure> out;
  std::vector<char> comp_seen((size_t)box.cell_count(), 0);

  for_each_point(box, [&](const Point& start) {
    const i64 sidx = box.index(start);
    if (f.cells[(size_t)sidx] != 'R' || comp_seen[(size_t)sidx]) return;

    // The red component itself.
    std::vector<Point> comp = {start};
    comp_seen[(size_t)sidx] = 1;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (const Point& nb : neighbors(comp[head], box)) {
        const i64 nidx = box.index(nb);
        if (f.cells[(size_t)nidx] == 'R' && !comp_seen[(size_t)nidx]) {
          comp_seen[(size_t)nidx] = 1;
          comp.push_back(nb);
        }
      }
    }

    // Flood outward without crossing red-blue edges; the reachable set is
    // the region the component encloses.
    std::vector<char> flood((size_t)box.cell_count(), 0);
    std::deque<Point> queue;
    for (const Point& p : comp) {
      flood[(size_t)box.index(p)] = 1;
      queue.push_back(p);
    }
    // Residues present per axis, for the interval fit.
    std::vector<std::vector<char>> present((size_t)n);
    for (int i = 0; i < n; ++i)
      present[(size_t)i].assign((size_t)box.extent(i), 0);
    while (!queue.empty()) {
      Point p = queue.front();
      queue.pop_front();
      const Point w = box.topology == Topology::Torus ? box.wrap(p) : p;
      for (int i = 0; i < n; ++i)
        present[(size_t)i][(size_t)(w[i] - box.lo[i])] = 1;
      const char cp = f.at(p);
      for (const Point& nb : neighbors(p, box)) {
        const i64 nidx = box.index(nb);
        if (flood[(size_t)nidx]) continue;
        if (bad_edge(cp, f.cells[(size_t)nidx])) continue;
        flood[(size_t)nidx] = 1;
        queue.push_back(box.point_at(nidx));
      }
    }

    RedStructure rs;
    rs.component_id = (int)out.size();
    Point lo = box.lo, hi = box.hi;
    std::vector<std::array<bool, 2>> clipped((size_t)n, {false, false});
    for (int i = 0; i < n; ++i) {
      const auto& row = present[(size_t)i];
      const i64 m = (i64)row.size();
      if (box.topology == Topology::HardBoundary) {
        i64 a = 0, b = m - 1;
        while (!row[(size_t)a]) ++a;
        while (!row[(size_t)b]) --b;
        lo[i] = box.lo[i] + a;
        hi[i] = box.lo[i] + b;
        clipped[(size_t)i][0] = a == 0;
        clipped[(size_t)i][1] = b == m - 1;
      } else {
        // Fit the smallest circular arc of residues; a full circle means the
        // shape wraps the torus and counts as clipped on both sides.
        i64 best_gap = 0, gap_end = -1;
        i64 run = 0;
        for (i64 k = 0; k < 2 * m; ++k) {
          if (!row[(size_t)(k % m)]) {
            ++run;
            if (run >= m) break;
            if (run > best_gap) {
              best_gap = run;
              gap_end = k;
            }
          } else {
            run = 0;
          }
        }
        if (best_gap == 0) {
          lo[i] = box.lo[i];
          hi[i] = box.hi[i];
          clipped[(size_t)i][0] = clipped[(size_t)i][1] = true;
        } else {
          const i64 a = (gap_end + 1) % m;
          lo[i] = box.lo[i] + a;
          hi[i] = lo[i] + (m - best_gap) - 1;
        }
      }
    }
    rs.shape = Rect(lo, hi);
    rs.shape.clipped = clipped;
    rs.finite = !rs.shape.any_clipped();
    out.push_back(std::move(rs));
  });
  return out;
}

FourCycleResult four_cycle_parity_check(const Labeling& f) {
  const Box& box = f.box;
  const int n = box.n();
  FourCycleResult result;
  for_each_point(box, [&](const Point& x) {
    if (!result.ok) return;
    for (int i = 0; i < n && result.ok; ++i)
      for (int j = i + 1; j < n && result.ok; ++j) {
        Point xi = x, xj = x, xij = x;
        ++xi[i];
        ++xj[j];
        ++xij[i];
        ++xij[j];
        if (box.topology == Topology::HardBoundary &&
            (!box.contains_raw(xi) || !box.contains_raw(xj)))
          continue;
        const char cx = f.at(x), ci = f.at(xi), cj = f.at(xj), cij = f.at(xij);
        int bad = bad_edge(cx, ci) + bad_edge(ci, cij) + bad_edge(cj, cij) +
                  bad_edge(cx, cj);
        if (bad % 2) {
          result.ok = false;
          result.cycle = {x, xi, xij, xj};
        }
      }
  });
  return result;
}

HexResult hex_connectivity_check(const Toast& t) {
  if (!t.validated) throw UsageError("hex check requires a validated toast");
  if (t.box.topology != Topology::Torus)
    throw UsageError("hex check is defined on tori only");
  const Box& box = t.box;
  const Labeling f = label_from_toast(t);

  Grid<char> covered(box, 0);
  for (const Rect& r : t.pieces) {
    Box cells(r.lo, r.hi);
    for_each_point(cells, [&](const Point& p) { covered.at(p) = 1; });
  }
  std::vector<i64> far_green;
  for_each_point(box, [&](const Point& p) {
    if (covered.at(p)) return;
    for (const Point& nb : neighbors(p, box))
      if (covered.at(nb)) return;
    far_green.push_back(box.index(p));
  });
  HexResult result;
  if (far_green.empty()) return result;

  std::vector<char> seen((size_t)box.cell_count(), 0);
  std::deque<i64> queue = {far_green[0]};
  seen[(size_t)far_green[0]] = 1;
  while (!queue.empty()) {
    const i64 idx = queue.front();
    queue.pop_front();
    for (const Point& nb : neighbors(box.point_at(idx), box)) {
      const i64 nidx = box.index(nb);
      if (seen[(size_t)nidx] || f.cells[(size_t)nidx] != 'G') continue;
      seen[(size_t)nidx] = 1;
      queue.push_back(nidx);
    }
  }
  for (i64 idx : far_green)
    if (!seen[(size_t)idx]) {
      result.ok = false;
      result.a = box.point_at(far_green[0]);
      result.b = box.point_at(idx);
      break;
    }
  return result;
}

double containment_bound(int n, double epsilon, i64 d_size, i64 n_max,
                         double* tail_out) {
  if (n < 1) throw UsageError("dimension must be >= 1");
  if (!(epsilon > 0 && epsilon < 1))
    throw UsageError("epsilon must lie strictly between 0 and 1");
  if (d_size < 1 || n_max < 1) throw UsageError("sizes must be positive");
  const double rho =
      std::pow(1.0 - epsilon, 1.0 / ((double)d_size * (double)d_size));
  double sum = 0, pw = 1;
  for (i64 N = 1; N <= n_max; ++N) {
    pw *= rho;
    sum += (double)N * pw;
  }
  // Closed-form geometric-polynomial tail past n_max.
  const double tail = std::pow(rho, (double)n_max + 1) *
                      ((double)(n_max + 1) - (double)n_max * rho) /
                      ((1.0 - rho) * (1.0 - rho));
  if (tail_out) *tail_out = tail;
  return std::pow(sum + tail, n);
}

ContainmentStats containment_stats(const Toast& t) {
  const Grid<i64> counts = containment_counts(t);
  ContainmentStats s;
  i64 total = 0;
  for (i64 c : counts.v) {
    total += c;
    s.max = std::max(s.max, c);
  }
  s.mean = (double)total / (double)counts.v.size();
  s.histogram.assign((size_t)s.max + 1, 0);
  for (i64 c : counts.v) ++s.histogram[(size_t)c];
  return s;
}

}  // namespace toastkit
