#include "toastkit/lcl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toastkit {

WindowAssignment::WindowAssignment(int dim, i64 spacing, char fill)
    : n(dim), q(spacing) {
  if (dim < 1) throw UsageError("window dimension must be >= 1");
  if (spacing < 1) throw UsageError("window spacing must be >= 1");
  values.assign((size_t)cells(), fill);
}

i64 WindowAssignment::cells() const {
  i64 total = 1;
  for (int i = 0; i < n; ++i) total = checked_mul(total, width());
  return total;
}

i64 WindowAssignment::index(const Point& p) const {
  i64 idx = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] < 0 || p[i] > 2 * q) throw UsageError("window point out of range");
    idx = idx * width() + p[i];
  }
  return idx;
}

namespace {

// One hyperoctahedral element: target cell w maps to source cell
// perm/sign-transformed about the window center.
WindowAssignment apply_symmetry(const WindowAssignment& phi,
                                const std::vector<int>& perm,
                                unsigned sign_mask) {
  WindowAssignment out(phi.n, phi.q);
  const i64 c = phi.q;
  Box wbox(Point(std::vector<i64>((size_t)phi.n, 0)),
           Point(std::vector<i64>((size_t)phi.n, 2 * phi.q)));
  for_each_point(wbox, [&](const Point& w) {
    Point src(std::vector<i64>((size_t)phi.n, 0));
    for (int i = 0; i < phi.n; ++i) {
      i64 v = w[i] - c;
      if (sign_mask & (1u << i)) v = -v;
      src[perm[(size_t)i]] = v + c;
    }
    out.set(w, phi.at(src));
  });
  return out;
}

template <class F>
void for_each_symmetry(int n, F&& f) {
  std::vector<int> perm((size_t)n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) f(perm, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Index maps for the hyperoctahedral group acting on the window: entry
// map[t] is the source cell index feeding target cell t.
std::vector<std::vector<int>> symmetry_index_maps(int n, i64 q) {
  const i64 w = 2 * q + 1;
  i64 cells = 1;
  for (int i = 0; i < n; ++i) cells *= w;
  std::vector<std::vector<int>> maps;
  std::vector<i64> coord((size_t)n), src((size_t)n);
  for_each_symmetry(n, [&](const std::vector<int>& perm, unsigned mask) {
    std::vector<int> m((size_t)cells);
    for (i64 t = 0; t < cells; ++t) {
      i64 rem = t;
      for (int i = n - 1; i >= 0; --i) {
        coord[(size_t)i] = rem % w;
        rem /= w;
      }
      for (int i = 0; i < n; ++i) {
        i64 v = coord[(size_t)i] - q;
        if (mask & (1u << i)) v = -v;
        src[(size_t)perm[(size_t)i]] = v + q;
      }
      i64 s = 0;
      for (int i = 0; i < n; ++i) s = s * w + src[(size_t)i];
      m[(size_t)t] = (int)s;
    }
    maps.push_back(std::move(m));
  });
  return maps;
}

}  // namespace

std::vector<WindowAssignment> symmetry_orbit(const WindowAssignment& phi) {
  std::set<WindowAssignment> orbit;
  for_each_symmetry(phi.n, [&](const std::vector<int>& perm, unsigned mask) {
    orbit.insert(apply_symmetry(phi, perm, mask));
  });
  return std::vector<WindowAssignment>(orbit.begin(), orbit.end());
}

RtMembership::RtMembership(i64 q, i64 inflation)
    : q_(q), inflation_(inflation < 0 ? q + 2 : inflation) {
  if (q < 4) throw UsageError("window membership requires q >= 4");
  if (inflation_ < 1) throw UsageError("inflation radius must be >= 1");
}

namespace {

// Count of marked cells in the axis-aligned range [lo, hi] of an indicator
// over the window [0, 2q]^n, via an (w+1)^n inclusion-exclusion prefix grid.
struct PrefixGrid {
  int n;
  i64 w;  // cells per axis
  std::vector<i64> sums;  // (w+1)^n, index with +1 offsets

  PrefixGrid(const WindowAssignment& phi, char mark) : n(phi.n), w(2 * phi.q + 1) {
    i64 total = 1;
    for (int i = 0; i < n; ++i) total *= (w + 1);
    sums.assign((size_t)total, 0);
    Box wbox(Point(std::vector<i64>((size_t)n, 0)),
             Point(std::vector<i64>((size_t)n, w - 1)));
    for_each_point(wbox, [&](const Point& p) {
      if (phi.values[(size_t)phi.index(p)] != mark) return;
      i64 idx = 0;
      for (int i = 0; i < n; ++i) idx = idx * (w + 1) + (p[i] + 1);
      sums[(size_t)idx] = 1;
    });
    // Accumulate along each axis in turn.
    for (int axis = 0; axis < n; ++axis) {
      i64 stride = 1;
      for (int i = axis + 1; i < n; ++i) stride *= (w + 1);
      for (i64 idx = 0; idx < total; ++idx) {
        const i64 coord = (idx / stride) % (w + 1);
        if (coord > 0) sums[(size_t)idx] += sums[(size_t)(idx - stride)];
      }
    }
  }

  i64 count(const std::vector<i64>& lo, const std::vector<i64>& hi) const {
    i64 result = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      i64 idx = 0;
      int bits = 0;
      for (int i = 0; i < n; ++i) {
        i64 v;
        if (mask & (1u << i)) {
          v = lo[(size_t)i];  // exclusive corner
          ++bits;
        } else {
          v = hi[(size_t)i] + 1;
        }
        idx = idx * (w + 1) + v;
      }
      result += (bits % 2 ? -1 : 1) * sums[(size_t)idx];
    }
    return result;
  }
};

struct Interval {
  i64 lo, hi;
  bool cl, ch;
};

struct Candidate {
  Rect r;
  std::vector<int> red_cells;   // window cell indices its boundary covers
  std::vector<int> blue_cells;  // window cell indices its outer ring covers
};

}  // namespace

bool RtMembership::decide_raw(const WindowAssignment& phi) const {
  if (phi.q != q_) throw UsageError("window spacing does not match the problem");
  const int n = phi.n;
  const i64 W = 2 * q_;        // window is [0, W]^n
  const i64 ilo = -inflation_;  // inflated search domain per axis
  const i64 ihi = W + inflation_;

  bool any_red = false, any_blue = false;
  for (char c : phi.values) {
    if (c == 'R') any_red = true;
    else if (c == 'B') any_blue = true;
    else if (c != 'G') throw UsageError("window labels must be R, B or G");
  }
  if (!any_red && !any_blue) return true;  // the empty family

  const PrefixGrid red(phi, 'R');
  const PrefixGrid blue(phi, 'B');

  // Per-axis interval choices within the inflated domain; a clipped side
  // sits at the domain edge (the real rect continues past it) and lifts the
  // minimum-side requirement.
  std::vector<Interval> ivs;
  for (i64 lo = ilo; lo <= ihi; ++lo)
    for (i64 hi = lo; hi <= ihi; ++hi)
      for (int cl = 0; cl <= (lo == ilo ? 1 : 0); ++cl)
        for (int ch = 0; ch <= (hi == ihi ? 1 : 0); ++ch) {
          if (!cl && !ch && hi - lo < q_) continue;
          ivs.push_back({lo, hi, cl != 0, ch != 0});
        }

  // Enumerate rect candidates (odometer over per-axis intervals), keeping
  // those whose visible boundary lies on red cells and visible outer ring on
  // blue cells within the window, and which touch the window at all.
  std::vector<Candidate> cands;
  std::vector<size_t> pick((size_t)n, 0);
  std::vector<i64> flo((size_t)n), fhi((size_t)n);
  for (;;) {
    bool admissible = true, useful = false;
    for (int i = 0; i < n && admissible; ++i) {
      const Interval& iv = ivs[pick[(size_t)i]];
      for (int side = 0; side < 2 && admissible; ++side) {
        if (side == 0 ? iv.cl : iv.ch) continue;
        const i64 pin = side == 0 ? iv.lo : iv.hi;
        // Face slab clipped to the window.
        auto slab_check = [&](i64 pinned, const PrefixGrid& grid) -> int {
          // returns -1 bad, 0 empty, 1 nonempty all-marked
          if (pinned < 0 || pinned > W) return 0;
          i64 cells = 1;
          for (int j = 0; j < n; ++j) {
            if (j == i) {
              flo[(size_t)j] = fhi[(size_t)j] = pinned;
              continue;
            }
            const Interval& jv = ivs[pick[(size_t)j]];
            const i64 a = std::max<i64>(jv.lo, 0);
            const i64 b = std::min<i64>(jv.hi, W);
            if (a > b) return 0;
            flo[(size_t)j] = a;
            fhi[(size_t)j] = b;
            cells *= b - a + 1;
          }
          return grid.count(flo, fhi) == cells ? 1 : -1;
        };
        const int bres = slab_check(pin, red);
        if (bres < 0) {
          admissible = false;
          break;
        }
        if (bres > 0) useful = true;
        const int ores = slab_check(side == 0 ? pin - 1 : pin + 1, blue);
        if (ores < 0) {
          admissible = false;
          break;
        }
        if (ores > 0) useful = true;
      }
    }
    if (admissible && useful) {
      Point rlo(std::vector<i64>((size_t)n, 0)), rhi = rlo;
      for (int i = 0; i < n; ++i) {
        rlo[i] = ivs[pick[(size_t)i]].lo;
        rhi[i] = ivs[pick[(size_t)i]].hi;
      }
      Candidate cand;
      cand.r = Rect(rlo, rhi);
      for (int i = 0; i < n; ++i) {
        cand.r.clipped[(size_t)i][0] = ivs[pick[(size_t)i]].cl;
        cand.r.clipped[(size_t)i][1] = ivs[pick[(size_t)i]].ch;
      }
      std::set<i64> red_idx, blue_idx;
      for (const Point& p : rect_boundary(cand.r)) {
        bool in = true;
        for (int i = 0; i < n; ++i)
          if (p[i] < 0 || p[i] > W) in = false;
        if (in) red_idx.insert(phi.index(p));
      }
      for (const Point& p : rect_outer_boundary(cand.r)) {
        bool in = true;
        for (int i = 0; i < n; ++i)
          if (p[i] < 0 || p[i] > W) in = false;
        if (in) blue_idx.insert(phi.index(p));
      }
      for (i64 v : red_idx) cand.red_cells.push_back((int)v);
      for (i64 v : blue_idx) cand.blue_cells.push_back((int)v);
      cands.push_back(std::move(cand));
    }
    int ax = n - 1;
    while (ax >= 0 && pick[(size_t)ax] + 1 == ivs.size()) {
      pick[(size_t)ax] = 0;
      --ax;
    }
    if (ax < 0) break;
    ++pick[(size_t)ax];
  }

  // Red components (edge-adjacency inside the window). Any family with
  // pairwise boundary distance > q must cover each component by a single
  // rect, so components are the covering targets.
  Box wbox(Point(std::vector<i64>((size_t)n, 0)),
           Point(std::vector<i64>((size_t)n, W)));
  const i64 wcells = phi.cells();
  std::vector<int> comp_of((size_t)wcells, -1);
  std::vector<i64> comp_size;
  std::vector<int> blue_list;
  for_each_point(wbox, [&](const Point& p) {
    const i64 idx = phi.index(p);
    if (phi.values[(size_t)idx] == 'B') blue_list.push_back((int)idx);
    if (phi.values[(size_t)idx] != 'R' || comp_of[(size_t)idx] >= 0) return;
    const int id = (int)comp_size.size();
    comp_size.push_back(0);
    std::vector<Point> stack = {p};
    comp_of[(size_t)idx] = id;
    while (!stack.empty()) {
      Point cur = stack.back();
      stack.pop_back();
      ++comp_size[(size_t)id];
      for (const Point& nb : neighbors(cur, wbox)) {
        const i64 nidx = phi.index(nb);
        if (phi.values[(size_t)nidx] == 'R' && comp_of[(size_t)nidx] < 0) {
          comp_of[(size_t)nidx] = id;
          stack.push_back(nb);
        }
      }
    }
  });
  const int ncomp = (int)comp_size.size();

  // Which candidates fully cover which components / blue cells.
  std::vector<std::vector<int>> comp_cands((size_t)ncomp);
  std::vector<std::vector<int>> blue_cands;
  std::vector<std::vector<char>> covers_comp(cands.size());
  for (size_t c = 0; c < cands.size(); ++c) {
    std::vector<i64> per_comp((size_t)ncomp, 0);
    for (int cell : cands[c].red_cells) ++per_comp[(size_t)comp_of[(size_t)cell]];
    covers_comp[c].assign((size_t)ncomp, 0);
    for (int k = 0; k < ncomp; ++k)
      if (per_comp[(size_t)k] == comp_size[(size_t)k]) {
        covers_comp[c][(size_t)k] = 1;
        comp_cands[(size_t)k].push_back((int)c);
      }
  }
  for (int k = 0; k < ncomp; ++k)
    if (comp_cands[(size_t)k].empty()) return false;
  std::vector<int> blue_pos((size_t)wcells, -1);
  for (size_t b = 0; b < blue_list.size(); ++b)
    blue_pos[(size_t)blue_list[b]] = (int)b;
  blue_cands.assign(blue_list.size(), {});
  for (size_t c = 0; c < cands.size(); ++c)
    for (int cell : cands[c].blue_cells)
      blue_cands[(size_t)blue_pos[(size_t)cell]].push_back((int)c);
  for (const auto& lst : blue_cands)
    if (lst.empty()) return false;

  // Depth-first cover search with pairwise spacing enforced lazily.
  Box flat(Point(std::vector<i64>((size_t)n, 0)),
           Point(std::vector<i64>((size_t)n, 0)));
  std::unordered_map<i64, bool> compat_memo;
  auto compatible = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    const i64 key = (i64)a * (i64)cands.size() + b;
    auto it = compat_memo.find(key);
    if (it != compat_memo.end()) return it->second;
    const bool ok =
        rect_boundary_dist(cands[(size_t)a].r, cands[(size_t)b].r, flat) > q_;
    compat_memo.emplace(key, ok);
    return ok;
  };

  std::vector<int> chosen;
  std::vector<char> comp_done((size_t)ncomp, 0);
  std::vector<char> blue_done(blue_list.size(), 0);

  std::function<bool()> dfs = [&]() -> bool {
    // Fail-first: branch on the unsatisfied target with the fewest options.
    int best_target = -1;
    bool best_is_comp = true;
    size_t best_options = SIZE_MAX;
    auto options_of = [&](const std::vector<int>& lst) {
      size_t cnt = 0;
      for (int c : lst) {
        bool ok = true;
        for (int ch : chosen)
          if (!compatible(c, ch)) {
            ok = false;
            break;
          }
        if (ok) ++cnt;
      }
      return cnt;
    };
    for (int k = 0; k < ncomp; ++k) {
      if (comp_done[(size_t)k]) continue;
      const size_t opt = options_of(comp_cands[(size_t)k]);
      if (opt < best_options) {
        best_options = opt;
        best_target = k;
        best_is_comp = true;
      }
    }
    if (best_target < 0) {
      for (size_t b = 0; b < blue_list.size(); ++b) {
        if (blue_done[b]) continue;
        const size_t opt = options_of(blue_cands[b]);
        if (opt < best_options) {
          best_options = opt;
          best_target = (int)b;
          best_is_comp = false;
        }
      }
    }
    if (best_target < 0) return true;  // everything covered
    if (best_options == 0) return false;

    const std::vector<int>& lst = best_is_comp
                                      ? comp_cands[(size_t)best_target]
                                      : blue_cands[(size_t)best_target];
    for (int c : lst) {
      bool ok = true;
      for (int ch : chosen)
        if (!compatible(c, ch)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<int> touched_comps, touched_blues;
      for (int k = 0; k < ncomp; ++k)
        if (!comp_done[(size_t)k] && covers_comp[(size_t)c][(size_t)k]) {
          comp_done[(size_t)k] = 1;
          touched_comps.push_back(k);
        }
      for (int cell : cands[(size_t)c].blue_cells) {
        const int b = blue_pos[(size_t)cell];
        if (!blue_done[(size_t)b]) {
          blue_done[(size_t)b] = 1;
          touched_blues.push_back(b);
        }
      }
      chosen.push_back(c);
      if (dfs()) return true;
      chosen.pop_back();
      for (int k : touched_comps) comp_done[(size_t)k] = 0;
      for (int b : touched_blues) blue_done[(size_t)b] = 0;
    }
    return false;
  };
  return dfs();
}

bool RtMembership::member(const WindowAssignment& phi) {
  const std::string raw =
      std::to_string(phi.n) + ":" +
      std::string(phi.values.begin(), phi.values.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = raw_memo_.find(raw);
    if (it != raw_memo_.end()) return it->second;
  }
  const std::vector<std::vector<int>>* maps;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = sym_maps_[phi.n];
    if (slot.empty()) slot = symmetry_index_maps(phi.n, q_);
    maps = &slot;
  }
  std::string best, buf(phi.values.size(), 0);
  for (const auto& m : *maps) {
    for (size_t t = 0; t < m.size(); ++t)
      buf[t] = phi.values[(size_t)m[t]];
    if (best.empty() || buf < best) best = buf;
  }
  const std::string canon = std::to_string(phi.n) + ":" + best;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = canon_memo_.find(canon);
    if (it != canon_memo_.end()) {
      raw_memo_.emplace(raw, it->second);
      return it->second;
    }
  }
  const bool result = decide_raw(phi);
  std::lock_guard<std::mutex> lock(mu_);
  raw_memo_.emplace(raw, result);
  canon_memo_.emplace(canon, result);
  return result;
}

namespace {

// Process-wide memoization pool: membership decisions depend only on q, so
// every caller for the same spacing shares one cache.
std::shared_ptr<RtMembership> shared_membership(i64 q) {
  static std::mutex mu;
  static std::unordered_map<i64, std::shared_ptr<RtMembership>> pool;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = pool[q];
  if (!slot) slot = std::make_shared<RtMembership>(q);
  return slot;
}

}  // namespace

bool rt_window_member(const WindowAssignment& phi) {
  return shared_membership(phi.q)->member(phi);
}

LclProblem make_rt_problem(i64 q, int n) {
  LclProblem p;
  p.name = "rt:" + std::to_string(q);
  p.n = n;
  p.alphabet = "RBG";
  p.neutral = 'G';
  Box wbox(Point(std::vector<i64>((size_t)n, 0)),
           Point(std::vector<i64>((size_t)n, 2 * q)));
  for_each_point(wbox, [&](const Point& w) { p.window.push_back(w); });
  auto shared = shared_membership(q);
  p.member = [shared, q, n](const std::vector<char>& vals) {
    bool all_green = true;
    for (char c : vals)
      if (c != 'G') all_green = false;
    if (all_green) return true;
    WindowAssignment phi(n, q);
    phi.values = vals;  // window order matches index order
    return shared->member(phi);
  };
  return p;
}

LclProblem make_coloring_problem(int n, int k) {
  if (k < 2 || k > 9) throw UsageError("coloring needs 2 <= k <= 9");
  LclProblem p;
  p.name = "color:" + std::to_string(k);
  p.n = n;
  for (char c = '0'; c < '0' + k; ++c) p.alphabet.push_back(c);
  p.window.push_back(Point(std::vector<i64>((size_t)n, 0)));
  for (int i = 0; i < n; ++i) {
    Point e(std::vector<i64>((size_t)n, 0));
    e[i] = 1;
    p.window.push_back(e);
  }
  p.member = [n](const std::vector<char>& vals) {
    for (int i = 1; i <= n; ++i)
      if (vals[(size_t)i] == vals[0]) return false;
    return true;
  };
  return p;
}

std::vector<Violation> verify_labeling(const LclProblem& p, const Labeling& f) {
  if (f.alphabet != p.alphabet)
    throw UsageError("labeling alphabet does not match the problem");
  if (f.box.n() != p.n) throw UsageError("dimension mismatch");
  const int n = p.n;
  const bool torus = f.box.topology == Topology::Torus;
  const size_t wsz = p.window.size();

  // Flat-index arithmetic: the anchor loop runs over millions of cells, so
  // everything below works on raw coordinates and strides with no per-cell
  // allocation.
  std::vector<i64> stride((size_t)n, 1);
  for (int i = n - 2; i >= 0; --i)
    stride[(size_t)i] = stride[(size_t)i + 1] * f.box.extent(i + 1);

  std::vector<i64> max_off((size_t)n, 0);
  for (const Point& w : p.window)
    for (int i = 0; i < n; ++i)
      max_off[(size_t)i] = std::max(max_off[(size_t)i], w[i]);
  for (int i = 0; i < n; ++i)
    if (max_off[(size_t)i] >= f.box.extent(i)) {
      // No anchor admits the window on a plain box; on a torus the window
      // would wrap onto itself, which the offset arithmetic cannot express.
      if (torus) throw UsageError("window does not fit around the torus");
      return {};
    }

  std::vector<Violation> out;
  std::vector<char> vals(wsz);
  // Evaluate the window at an anchor given by raw coordinates. The caller
  // guarantees the window fits (HardBoundary) or may wrap (Torus).
  auto evaluate = [&](const std::vector<i64>& a) {
    for (size_t w = 0; w < wsz; ++w) {
      i64 idx = 0;
      for (int i = 0; i < n; ++i) {
        i64 c = a[(size_t)i] + p.window[w][i];
        if (torus && c > f.box.hi[i]) c -= f.box.extent(i);
        idx += (c - f.box.lo[i]) * stride[(size_t)i];
      }
      vals[w] = f.cells[(size_t)idx];
    }
    if (!p.member(vals))
      out.push_back({Point(std::vector<i64>(a)), p.name,
                     "window is not an allowed configuration"});
  };

  std::vector<i64> cur(f.box.lo.c);
  std::vector<i64> a((size_t)n);
  auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && cur[(size_t)i] == f.box.hi[i]) {
      cur[(size_t)i] = f.box.lo[i];
      --i;
    }
    if (i < 0) return false;
    ++cur[(size_t)i];
    return true;
  };

  if (p.neutral) {
    // Only anchors whose window sees a non-neutral cell can fail; gather
    // them from the non-neutral cells instead of scanning every window.
    std::vector<i64> anchors;
    const i64 total = f.box.cell_count();
    for (i64 idx = 0;; ++idx) {
      if (f.cells[(size_t)idx] != p.neutral) {
        for (size_t w = 0; w < wsz; ++w) {
          bool ok = true;
          i64 aidx = 0;
          for (int i = 0; i < n; ++i) {
            i64 c = cur[(size_t)i] - p.window[w][i];
            if (torus) {
              if (c < f.box.lo[i]) c += f.box.extent(i);
            } else if (c < f.box.lo[i] || c + max_off[(size_t)i] > f.box.hi[i]) {
              ok = false;
              break;
            }
            aidx += (c - f.box.lo[i]) * stride[(size_t)i];
          }
          if (ok) anchors.push_back(aidx);
        }
      }
      if (idx + 1 >= total || !advance()) break;
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    for (i64 idx : anchors) {
      i64 rem = idx;
      for (int i = 0; i < n; ++i) {
        a[(size_t)i] = f.box.lo[i] + rem / stride[(size_t)i];
        rem %= stride[(size_t)i];
      }
      evaluate(a);
    }
  } else {
    for (;;) {
      bool fits = true;
      if (!torus)
        for (int i = 0; i < n; ++i)
          if (cur[(size_t)i] + max_off[(size_t)i] > f.box.hi[i]) fits = false;
      if (fits) evaluate(cur);
      if (!advance()) break;
    }
  }
  return out;
}

std::vector<Violation> crt_verify(const Labeling& f, i64 q) {
  if (f.alphabet != "RB01")
    throw UsageError("refined labeling must use alphabet RB01");
  if (q < 4) throw UsageError("crt_verify requires q >= 4");
  std::vector<Violation> out;

  Labeling pi(f.box, "RBG", 'G');
  for_each_point(f.box, [&](const Point& p) {
    const char c = f.at(p);
    if (c == 'R' || c == 'B') pi.set(p, c);
  });
  for (Violation v : verify_labeling(make_rt_problem(q, f.box.n()), pi)) {
    v.tag = "C1";
    out.push_back(std::move(v));
  }

  for_each_point(f.box, [&](const Point& x) {
    const char cx = f.at(x);
    if (cx != '0' && cx != '1') return;
    for (int i = 0; i < f.box.n(); ++i) {
      Point y = x;
      ++y[i];
      if (f.box.topology == Topology::HardBoundary && !f.box.contains_raw(y))
        continue;
      const char cy = f.at(y);
      if ((cy == '0' || cy == '1') && cy == cx)
        out.push_back({x, "C2",
                       std::string("adjacent cells share color ") + cx +
                           " on axis " + std::to_string(i)});
    }
  });
  return out;
}

std::vector<Violation> crt_plus_verify(const Labeling& f, const Labeling& h1,
                                       const Labeling& h2, i64 q) {
  if (f.box.n() != 2) throw UsageError("the staircase conditions are planar");
  if (!(h1.box.lo == f.box.lo && h1.box.hi == f.box.hi &&
        h2.box.lo == f.box.lo && h2.box.hi == f.box.hi &&
        h1.box.topology == f.box.topology &&
        h2.box.topology == f.box.topology))
    throw UsageError("all three labelings must share a box");
  if (h1.alphabet != "01" || h2.alphabet != "01")
    throw UsageError("indicator layers must use alphabet 01");

  std::vector<Violation> out = crt_verify(f, q);
  const Labeling* hs[2] = {&h1, &h2};
  auto in_box = [&](const Point& p) {
    return f.box.topology == Topology::Torus || f.box.contains_raw(p);
  };
  for_each_point(f.box, [&](const Point& x) {
    if (f.at(x) == 'R' && (h1.at(x) != '0' || h2.at(x) != '0'))
      out.push_back({x, "+2", "indicator set on a red cell"});
    for (int i = 0; i < 2; ++i) {
      Point xe = x;
      ++xe[i];
      if (in_box(xe) && f.at(x) == 'B' && f.at(xe) == 'R' &&
          hs[i]->at(x) != '1')
        out.push_back({x, "+3",
                       "blue cell beside a red cell lacks indicator " +
                           std::to_string(i + 1)});
      Point xd = x;
      ++xd[0];
      ++xd[1];
      if (in_box(xe) && in_box(xd) && hs[i]->at(xe) == '1' &&
          hs[i]->at(xd) == '1' && hs[i]->at(x) != '1')
        out.push_back({x, "+4",
                       "indicator " + std::to_string(i + 1) +
                           " not closed under the staircase step"});
    }
  });
  return out;
}

}  // namespace toastkit
