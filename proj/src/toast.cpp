#include "toastkit/toast.hpp"

#include <algorithm>
#include <sstream>

namespace toastkit {

std::string to_string(ToastViolation::Kind k) {
  switch (k) {
    case ToastViolation::Kind::Domain: return "domain";
    case ToastViolation::Kind::SideLength: return "side-length";
    case ToastViolation::Kind::Nesting: return "nesting";
    case ToastViolation::Kind::Spacing: return "spacing";
  }
  return "?";
}

namespace {

// Relation between two rects under the box topology. On a torus both rects
// are reduced so that lo lies in the box; relative shifts of one whole
// period per axis cover all placements since rects never wrap.
struct PairRelation {
  bool a_in_b = false;
  bool b_in_a = false;
  bool disjoint = false;
};

Rect normalize(const Rect& r, const Box& box) {
  if (box.topology == Topology::HardBoundary) return r;
  Rect out = r;
  Point lo = box.wrap(r.lo);
  for (int i = 0; i < r.n(); ++i) {
    out.hi[i] = lo[i] + r.side(i);
    out.lo[i] = lo[i];
  }
  return out;
}

PairRelation relate(const Rect& a, const Rect& b, const Box& box) {
  const int n = box.n();
  PairRelation rel;
  bool a_in_b = true, b_in_a = true, overlap = true;
  for (int i = 0; i < n; ++i) {
    const i64 shifts[3] = {
        box.topology == Topology::Torus ? -box.extent(i) : 0, 0,
        box.topology == Topology::Torus ? box.extent(i) : 0};
    bool ain = false, bin = false, ov = false;
    for (i64 s : shifts) {
      const i64 alo = a.lo[i] + s, ahi = a.hi[i] + s;
      if (alo >= b.lo[i] && ahi <= b.hi[i]) ain = true;
      if (b.lo[i] >= alo && b.hi[i] <= ahi) bin = true;
      if (alo <= b.hi[i] && ahi >= b.lo[i]) ov = true;
    }
    a_in_b = a_in_b && ain;
    b_in_a = b_in_a && bin;
    overlap = overlap && ov;
  }
  rel.a_in_b = a_in_b;
  rel.b_in_a = b_in_a;
  rel.disjoint = !overlap;
  return rel;
}

}  // namespace

ToastReport validate_toast(const std::vector<Rect>& pieces, i64 q,
                           const Box& box) {
  ToastReport report;
  const int n = box.n();
  const int count = static_cast<int>(pieces.size());

  std::vector<Rect> norm;
  norm.reserve(pieces.size());
  for (int i = 0; i < count; ++i) {
    const Rect& r = pieces[(size_t)i];
    if (r.n() != n) throw UsageError("piece dimension mismatch");
    if (r.any_clipped())
      throw UsageError("validated toasts may not contain clipped pieces");
    for (int ax = 0; ax < n; ++ax) {
      if (r.side(ax) < q) {
        report.violations.push_back(
            {ToastViolation::Kind::SideLength, i, -1,
             to_string(r) + " side " + std::to_string(r.side(ax)) + " < q=" +
                 std::to_string(q)});
        break;
      }
    }
    bool in_domain = true;
    if (box.topology == Topology::HardBoundary) {
      in_domain = box.contains_raw(r.lo) && box.contains_raw(r.hi);
    } else {
      for (int ax = 0; ax < n; ++ax)
        if (r.extent(ax) >= box.extent(ax)) in_domain = false;
    }
    if (!in_domain) {
      report.violations.push_back({ToastViolation::Kind::Domain, i, -1,
                                   to_string(r) + " exceeds the ambient box"});
    }
    norm.push_back(normalize(r, box));
  }

  report.parent.assign((size_t)count, -1);
  bool big_gap = true;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const PairRelation rel = relate(norm[(size_t)i], norm[(size_t)j], box);
      if (rel.a_in_b && rel.b_in_a) {
        report.violations.push_back({ToastViolation::Kind::Nesting, i, j,
                                     "duplicate pieces"});
        continue;
      }
      if (!rel.a_in_b && !rel.b_in_a && !rel.disjoint) {
        report.violations.push_back(
            {ToastViolation::Kind::Nesting, i, j,
             to_string(pieces[(size_t)i]) + " and " +
                 to_string(pieces[(size_t)j]) + " overlap without nesting"});
      }
      const i64 d = rect_boundary_dist(norm[(size_t)i], norm[(size_t)j], box);
      if (d <= q) {
        report.violations.push_back(
            {ToastViolation::Kind::Spacing, i, j,
             "boundary distance " + std::to_string(d) + " <= q=" +
                 std::to_string(q)});
      }
      // Big-gap certificate: a piece K demands clearance > 2 max_side(K)
      // from every piece not nested inside it, so non-nested pairs need
      // twice the larger side and nested pairs twice the inner side.
      i64 need_gap;
      if (!rel.a_in_b && !rel.b_in_a) {
        need_gap = 2 * std::max(norm[(size_t)i].max_side(),
                                norm[(size_t)j].max_side());
      } else {
        const auto& inner = rel.a_in_b ? norm[(size_t)i] : norm[(size_t)j];
        need_gap = 2 * inner.max_side();
      }
      if (d != kInfDist && d <= need_gap) big_gap = false;
      // Maintain the nesting forest: tightest container wins.
      // Compare by max side: containers of the same piece are totally
      // ordered by containment, so the smaller max side is the tighter one.
      // (Avoids cell_count, which can overflow for huge pieces.)
      auto consider = [&](int child, int parent_candidate) {
        int& cur = report.parent[(size_t)child];
        if (cur < 0 || norm[(size_t)parent_candidate].max_side() <
                           norm[(size_t)cur].max_side())
          cur = parent_candidate;
      };
      if (rel.a_in_b) consider(i, j);
      if (rel.b_in_a) consider(j, i);
    }
  }
  report.big_gap = report.ok() && big_gap;
  return report;
}

Toast make_toast(std::vector<Rect> pieces, i64 q, const Box& box) {
  ToastReport report = validate_toast(pieces, q, box);
  if (!report.ok()) {
    std::ostringstream os;
    os << "toast validation failed:";
    for (const auto& v : report.violations)
      os << " [" << to_string(v.kind) << "] " << v.detail << ";";
    throw UsageError(os.str());
  }
  Toast t;
  t.q = q;
  t.pieces = std::move(pieces);
  t.box = box;
  t.validated = true;
  t.big_gap = report.big_gap;
  t.parent = std::move(report.parent);
  return t;
}

Labeling label_from_toast(const Toast& t) {
  if (!t.validated) throw UsageError("label_from_toast requires a validated toast");
  if (t.q < 1) throw UsageError("label_from_toast requires q >= 1");
  Labeling f(t.box, "RBG", 'G');
  for (const Rect& r : t.pieces)
    for (const Point& p : rect_boundary(r))
      if (t.box.topology == Topology::Torus || t.box.contains_raw(p))
        f.set(p, 'R');
  for (const Rect& r : t.pieces)
    for (const Point& p : rect_outer_boundary(r)) {
      if (t.box.topology == Topology::HardBoundary && !t.box.contains_raw(p))
        continue;
      if (f.at(p) == 'R')
        throw std::logic_error("cell is both boundary and outer boundary");
      f.set(p, 'B');
    }
  return f;
}

i64 covered_cells(const Toast& t) {
  if (!t.validated) throw UsageError("coverage requires a validated toast");
  // Nesting holds, so the union is the disjoint union of maximal pieces; a
  // direct rasterization stays exact regardless.
  Grid<char> covered(t.box, 0);
  for (const Rect& r : t.pieces) {
    Box cells(r.lo, r.hi);
    for_each_point(cells, [&](const Point& p) { covered.at(p) = 1; });
  }
  i64 total = 0;
  for (char c : covered.v) total += c;
  return total;
}

double coverage(const Toast& t) {
  return static_cast<double>(covered_cells(t)) /
         static_cast<double>(t.box.cell_count());
}

Grid<i64> containment_counts(const Toast& t) {
  if (!t.validated) throw UsageError("containment_counts requires a validated toast");
  Grid<i64> counts(t.box, 0);
  for (const Rect& r : t.pieces) {
    Box cells(r.lo, r.hi);
    for_each_point(cells, [&](const Point& p) { ++counts.at(p); });
  }
  return counts;
}

}  // namespace toastkit
