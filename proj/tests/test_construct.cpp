#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "toastkit/construct.hpp"

using namespace toastkit;
using namespace toastkit::testing;


TEST_CASE("plane enumeration starts with the frozen spiral prefix") {
  Enumeration en(2);
  const std::vector<Point> want = {
      {0, 0},  {1, 0},  {1, 1},  {0, 1},  {-1, 1},  {-1, 0},
      {-1, -1}, {0, -1}, {1, -1}, {2, -1}, {2, 0},  {2, 1},
      {2, 2},  {1, 2},  {0, 2},  {-1, 2}, {-2, 2}, {-2, 1}};
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(en.point((i64)i) == want[i]);
}

TEST_CASE("enumeration is a bijection onto growing balls") {
  for (int n : {1, 2, 3}) {
    Enumeration en(n);
    std::set<Point> seen;
    i64 total = 1;
    for (int i = 0; i < n; ++i) total *= 5;  // ball of radius 2
    i64 covered = 0;
    for (i64 idx = 0; idx < 4 * total; ++idx) {
      Point p = en.point(idx);
      CHECK(seen.insert(p).second);
      bool in_ball = true;
      for (int i = 0; i < n; ++i)
        if (p[i] < -2 || p[i] > 2) in_ball = false;
      if (in_ball) ++covered;
    }
    // Every point of the radius-2 ball appears among the first |ball| * 4
    // indices for these dimensions.
    CHECK(covered == total);
  }
}

TEST_CASE("greedy toast honors its contract") {
  for (i64 q : {1, 4}) {
    Toast t = greedy_toast(2, q, 10, false);
    CHECK(t.validated);
    CHECK((i64)t.pieces.size() == 10);
    Enumeration en(2);
    for (i64 i = 0; i < 10; ++i) {
      const Rect& r = t.pieces[(size_t)i];
      // Square, centered on the enumerated point, side at least 2(i+q).
      const Point p = en.point(i);
      for (int ax = 0; ax < 2; ++ax) {
        CHECK(r.hi[ax] - p[ax] == p[ax] - r.lo[ax]);
        CHECK(r.side(ax) == r.side(0));
      }
      CHECK(r.side(0) >= 2 * (i + q));
      CHECK(r.contains(p));
    }
    // Minimality: shrinking any piece by one breaks admissibility against
    // some earlier piece, unless it was already at the floor 2(i+q).
    Box flat(Point{0, 0}, Point{0, 0});
    for (i64 i = 0; i < 10; ++i) {
      const Rect& r = t.pieces[(size_t)i];
      if (r.side(0) == 2 * (i + q)) continue;
      Rect shrunk(Point{r.lo[0] + 1, r.lo[1] + 1},
                  Point{r.hi[0] - 1, r.hi[1] - 1});
      bool blocked = false;
      for (i64 tt = 0; tt < i; ++tt)
        if (rect_boundary_dist(shrunk, t.pieces[(size_t)tt], flat) <= q)
          blocked = true;
      CHECK(blocked);
    }
  }
}

TEST_CASE("greedy big-gap variant certifies and nests") {
  Toast t = greedy_toast(2, 4, 5, true);
  CHECK(t.validated);
  CHECK(t.big_gap);
  // Every later square strictly contains every earlier one here.
  for (size_t i = 0; i + 1 < t.pieces.size(); ++i)
    for (int ax = 0; ax < 2; ++ax) {
      CHECK(t.pieces[i + 1].lo[ax] < t.pieces[i].lo[ax]);
      CHECK(t.pieces[i + 1].hi[ax] > t.pieces[i].hi[ax]);
    }
  // First two radii for q = 4 are pinned by the growth recurrence.
  CHECK(t.pieces[0].side(0) == 8);
  CHECK(t.pieces[1].side(0) == 44);
  // The extra clearance condition holds explicitly.
  Box flat(Point{0, 0}, Point{0, 0});
  for (size_t i = 0; i < t.pieces.size(); ++i)
    for (size_t j = i + 1; j < t.pieces.size(); ++j) {
      const i64 d = rect_boundary_dist(t.pieces[i], t.pieces[j], flat);
      CHECK(d > std::max<i64>(4, 2 * t.pieces[i].side(0)));
    }
}

TEST_CASE("greedy big-gap overflows checked arithmetic long before 50 pieces") {
  CHECK_THROWS_AS(greedy_toast(2, 4, 50, true), OverflowError);
}

TEST_CASE("safe-square extraction matches the BFS oracle") {
  for (auto topo : {Topology::HardBoundary, Topology::Torus}) {
    for (i64 q : {1, 2}) {
      for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
        Box box(Point{0, 0}, Point{17, 17}, topo);
        RandomField f = gen_field(box, RandomField::Kind::Bits, seed);
        // Sprinkle deterministic all-1 rings so matches actually occur.
        auto plant = [&](Point lo, i64 N) {
          Point hi = lo;
          for (int i = 0; i < 2; ++i) hi[i] += N;
          Rect r(lo, hi);
          Box ann(Point{lo[0] - q - 1, lo[1] - q - 1},
                  Point{hi[0] + q + 1, hi[1] + q + 1});
          for_each_point(ann, [&](const Point& p) {
            if (topo == Topology::HardBoundary && !box.contains_raw(p)) return;
            f.bits[(size_t)box.index(p)] = 0;
          });
          for (const Point& p : rect_boundary(r))
            f.bits[(size_t)box.index(p)] = 1;
        };
        plant(Point{4, 4}, q + 1);
        plant(Point{12, 11}, q);

        for (auto mode : {AnnulusMode::WidthQ, AnnulusMode::Width2N}) {
          Toast got = extract_safe_squares(f, q, mode);
          std::vector<Rect> want = safe_squares_brute(f, q, mode);
          CHECK(got.pieces == want);
          CHECK(got.validated);
          if (mode == AnnulusMode::Width2N && !got.pieces.empty())
            CHECK(got.big_gap);
        }
      }
    }
  }
}

TEST_CASE("planted exact field yields exactly the planted safe square") {
  Box box(Point{0, 0}, Point{15, 15}, Topology::HardBoundary);
  RandomField f;
  f.box = box;
  f.kind = RandomField::Kind::Bits;
  f.seed = 0;
  f.bits.assign((size_t)box.cell_count(), 0);
  Rect planted(Point{6, 6}, Point{9, 9});
  for (const Point& p : rect_boundary(planted))
    f.bits[(size_t)box.index(p)] = 1;
  Toast t = extract_safe_squares(f, 2, AnnulusMode::WidthQ);
  REQUIRE(t.pieces.size() == 1);
  CHECK(t.pieces[0] == planted);
  // A stray 1 in the annulus kills it.
  f.bits[(size_t)box.index(Point{6, 4})] = 1;
  CHECK(extract_safe_squares(f, 2, AnnulusMode::WidthQ).pieces.empty());
}

TEST_CASE("quasi-tile single scale covers the exact lattice density") {
  const i64 q = 2, N = 3;  // pitch 6
  Box box(Point{0, 0}, Point{29, 29}, Topology::Torus);
  QuasiTileReport rep;
  Toast t = quasi_tile(box, q, {N}, 123, &rep);
  CHECK(t.pieces.size() == 25);
  const double want = double((N + 1) * (N + 1)) / double((N + q + 1) * (N + q + 1));
  CHECK(rep.coverage == doctest::Approx(want));
  CHECK(coverage(t) == doctest::Approx(want));
  // Construction-time validity claims hold under the full validator.
  ToastReport check = validate_toast(t.pieces, q, box);
  CHECK(check.ok());
}

TEST_CASE("quasi-tile multi-scale removal keeps the toast valid") {
  const i64 q = 1;
  // Scales 2 and 12: pitches 4 and 14, both dividing 56.
  Box box(Point{0, 0}, Point{55, 55}, Topology::Torus);
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    QuasiTileReport rep;
    Toast t = quasi_tile(box, q, {2, 12}, seed, &rep);
    ToastReport check = validate_toast(t.pieces, q, box);
    CHECK(check.ok());
    REQUIRE(rep.scales.size() == 2);
    // Later scale never loses squares.
    CHECK(rep.scales[1].surviving == rep.scales[1].placed);
    CHECK(rep.scales[0].surviving <= rep.scales[0].placed);
    // Removal is tight: putting back any removed small square breaks it.
    std::set<Rect> kept(t.pieces.begin(), t.pieces.end());
    StreamRng rng(seed);
    Point eta0{rng.range(0, 2 + q), rng.range(0, 2 + q)};
    for (i64 x = 0; x < 14; ++x)
      for (i64 y = 0; y < 14; ++y) {
        Rect small(Point{eta0[0] + 4 * x, eta0[1] + 4 * y},
                   Point{eta0[0] + 4 * x + 2, eta0[1] + 4 * y + 2});
        if (kept.count(small)) continue;
        std::vector<Rect> with = t.pieces;
        with.push_back(small);
        CHECK(!validate_toast(with, q, box).ok());
      }
  }
}

TEST_CASE("quasi-tile is deterministic in the seed") {
  Box box(Point{0, 0}, Point{29, 29}, Topology::Torus);
  Toast a = quasi_tile(box, 2, {3}, 42);
  Toast b = quasi_tile(box, 2, {3}, 42);
  Toast c = quasi_tile(box, 2, {3}, 43);
  CHECK(a.pieces == b.pieces);
  CHECK(a.pieces != c.pieces);
}

TEST_CASE("quasi-tile rejects bad parameters") {
  Box box(Point{0, 0}, Point{29, 29}, Topology::Torus);
  CHECK_THROWS_AS(quasi_tile(box, 2, {4}, 1), UsageError);  // pitch 7 not | 30
  CHECK_THROWS_AS(quasi_tile(box, 2, {3, 3}, 1), UsageError);
  Box hard(Point{0, 0}, Point{29, 29}, Topology::HardBoundary);
  CHECK_THROWS_AS(quasi_tile(hard, 2, {3}, 1), UsageError);
}

TEST_CASE("auto scale schedule") {
  CHECK(auto_scales(4, 4) == std::vector<i64>{5, 20, 80, 320});
  CHECK(auto_scales(1, 3) == std::vector<i64>{2, 8, 32});
}
