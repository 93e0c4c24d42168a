#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "toastkit/geom.hpp"

using namespace toastkit;

namespace {

Box box2(i64 lo0, i64 lo1, i64 hi0, i64 hi1,
         Topology t = Topology::HardBoundary) {
  return Box(Point{lo0, lo1}, Point{hi0, hi1}, t);
}

std::set<Point> as_set(const std::vector<Point>& v) {
  return std::set<Point>(v.begin(), v.end());
}

// Independent oracle: boundary of r = cells of r adjacent to the complement,
// where the complement excludes the phantom extension behind clipped faces.
std::set<Point> brute_boundary(const Rect& r) {
  // Extend the rect by a margin behind each clipped face and test adjacency
  // against membership in the extended solid.
  Rect ext = r;
  for (int i = 0; i < r.n(); ++i) {
    if (r.clipped[(size_t)i][0]) ext.lo[i] -= 3;
    if (r.clipped[(size_t)i][1]) ext.hi[i] += 3;
  }
  std::set<Point> out;
  Box iter(r.lo, r.hi);
  for_each_point(iter, [&](const Point& p) {
    for (int i = 0; i < r.n(); ++i) {
      for (i64 s : {i64{-1}, i64{1}}) {
        Point q = p;
        q[i] += s;
        if (!ext.contains(q)) {
          out.insert(p);
          return;
        }
      }
    }
  });
  return out;
}

std::set<Point> brute_outer_boundary(const Rect& r) {
  Rect ext = r;
  for (int i = 0; i < r.n(); ++i) {
    if (r.clipped[(size_t)i][0]) ext.lo[i] -= 3;
    if (r.clipped[(size_t)i][1]) ext.hi[i] += 3;
  }
  std::set<Point> out;
  Box iter(Point{r.lo[0] - 1, r.lo[1] - 1}, Point{r.hi[0] + 1, r.hi[1] + 1});
  for_each_point(iter, [&](const Point& p) {
    if (ext.contains(p)) return;
    for (int i = 0; i < r.n(); ++i) {
      for (i64 s : {i64{-1}, i64{1}}) {
        Point q = p;
        q[i] += s;
        if (r.contains(q)) {
          out.insert(p);
          return;
        }
      }
    }
  });
  return out;
}

}  // namespace

TEST_CASE("l1_dist basics") {
  CHECK(l1_dist(Point{0, 0}, Point{2, 3}) == 5);
  CHECK(l1_dist(Point{5, 5}, Point{5, 5}) == 0);
  Box t = box2(0, 0, 9, 9, Topology::Torus);
  CHECK(l1_dist(Point{0, 0}, Point{9, 0}, t) == 1);
  CHECK(l1_dist(Point{0, 0}, Point{5, 0}, t) == 5);
  CHECK(l1_dist(Point{1, 1}, Point{8, 8}, t) == 6);
  CHECK_THROWS_AS(l1_dist(Point{0}, Point{0, 0}), UsageError);
}

TEST_CASE("l1_dist metric properties on random points") {
  Box t = box2(0, 0, 10, 12, Topology::Torus);
  std::vector<Point> pts;
  for (i64 x = 0; x <= 10; x += 3)
    for (i64 y = 0; y <= 12; y += 4) pts.push_back(Point{x, y});
  for (const auto& a : pts)
    for (const auto& b : pts) {
      CHECK(l1_dist(a, b, t) == l1_dist(b, a, t));
      CHECK((l1_dist(a, b, t) == 0) == (a == b));
      for (const auto& c : pts)
        CHECK(l1_dist(a, c, t) <= l1_dist(a, b, t) + l1_dist(b, c, t));
    }
}

TEST_CASE("neighbors respect topology") {
  Box h = box2(0, 0, 4, 4);
  CHECK(neighbors(Point{2, 2}, h).size() == 4);
  CHECK(neighbors(Point{0, 0}, h).size() == 2);
  Box t = box2(0, 0, 4, 4, Topology::Torus);
  auto nb = neighbors(Point{0, 0}, t);
  CHECK(nb.size() == 4);
  CHECK(as_set(nb).count(Point{4, 0}) == 1);
  CHECK(as_set(nb).count(Point{0, 4}) == 1);
}

TEST_CASE("rect_boundary examples") {
  Rect sq(Point{0, 0}, Point{2, 2});
  CHECK(rect_boundary(sq).size() == 8);
  CHECK(as_set(rect_boundary(sq)).count(Point{1, 1}) == 0);

  Rect strip(Point{0, 0}, Point{0, 5});
  CHECK(rect_boundary(strip).size() == 6);

  Rect clipped(Point{0, 0}, Point{4, 4});
  clipped.clipped[0][0] = true;  // low-x side extends past the domain
  CHECK(rect_boundary(clipped).size() == 13);
  CHECK(as_set(rect_boundary(clipped)) == brute_boundary(clipped));
}

TEST_CASE("rect_boundary matches brute force on many rects") {
  for (i64 a = 0; a <= 4; ++a)
    for (i64 b = 0; b <= 4; ++b)
      for (int mask = 0; mask < 16; ++mask) {
        Rect r(Point{10, 20}, Point{10 + a, 20 + b});
        r.clipped[0][0] = mask & 1;
        r.clipped[0][1] = mask & 2;
        r.clipped[1][0] = mask & 4;
        r.clipped[1][1] = mask & 8;
        CHECK(as_set(rect_boundary(r)) == brute_boundary(r));
        CHECK(as_set(rect_outer_boundary(r)) == brute_outer_boundary(r));
      }
}

TEST_CASE("rect_outer_boundary examples") {
  Rect cell(Point{0, 0}, Point{0, 0});
  CHECK(rect_outer_boundary(cell).size() == 4);
  Rect sq(Point{0, 0}, Point{2, 2});
  CHECK(rect_outer_boundary(sq).size() == 12);
  Rect whole(Point{0, 0}, Point{5, 5});
  for (int i = 0; i < 2; ++i) whole.clipped[(size_t)i] = {true, true};
  CHECK(rect_outer_boundary(whole).empty());
  CHECK(rect_boundary(whole).empty());
}

TEST_CASE("boundary and outer boundary are disjoint at distance 1") {
  Box h = box2(-50, -50, 50, 50);
  for (i64 a = 1; a <= 6; ++a)
    for (i64 b = 1; b <= 6; ++b) {
      Rect r(Point{-2, 3}, Point{-2 + a, 3 + b});
      auto bd = rect_boundary(r);
      auto ob = rect_outer_boundary(r);
      std::set<Point> bs = as_set(bd), os = as_set(ob);
      std::vector<Point> inter;
      std::set_intersection(bs.begin(), bs.end(), os.begin(), os.end(),
                            std::back_inserter(inter));
      CHECK(inter.empty());
      CHECK(set_dist(bd, ob, h) == 1);
    }
}

TEST_CASE("2-D perimeter formula") {
  Box h = box2(-50, -50, 100, 100);
  for (i64 a = 1; a <= 10; ++a)
    for (i64 b = 1; b <= 10; ++b) {
      Rect r(Point{0, 0}, Point{a, b});
      CHECK((i64)rect_boundary(r).size() == 2 * (a + 1) + 2 * (b + 1) - 4);
      CHECK((i64)brute_boundary(r).size() == 2 * (a + 1) + 2 * (b + 1) - 4);
    }
  (void)h;
}

TEST_CASE("set_dist examples") {
  Box h = box2(-10, -10, 40, 40);
  Rect a(Point{0, 0}, Point{9, 9});
  Rect b(Point{20, 20}, Point{29, 29});
  // Diagonal placement: the gap is 11 on each axis, 22 in the L1 metric.
  CHECK(set_dist(rect_boundary(a), rect_boundary(b), h) == 22);
  Rect outer(Point{0, 0}, Point{29, 29});
  Rect inner(Point{5, 5}, Point{14, 14});
  CHECK(set_dist(rect_boundary(outer), rect_boundary(inner), h) == 5);
  CHECK(set_dist(rect_boundary(a), {}, h) == kInfDist);
}

TEST_CASE("rect_boundary_dist agrees with brute force") {
  Box h = box2(-40, -40, 60, 60);
  Box t = box2(0, 0, 30, 30, Topology::Torus);
  std::vector<Rect> rects = {
      Rect(Point{0, 0}, Point{9, 9}),     Rect(Point{20, 20}, Point{29, 29}),
      Rect(Point{0, 0}, Point{29, 29}),   Rect(Point{5, 5}, Point{14, 14}),
      Rect(Point{2, 17}, Point{8, 20}),   Rect(Point{25, 1}, Point{28, 8}),
      Rect(Point{12, 0}, Point{18, 4}),   Rect(Point{0, 25}, Point{4, 29}),
  };
  for (const auto& x : rects)
    for (const auto& y : rects) {
      CHECK(rect_boundary_dist(x, y, h) ==
            set_dist(rect_boundary(x), rect_boundary(y), h));
      CHECK(rect_boundary_dist(x, y, t) ==
            set_dist(rect_boundary(x), rect_boundary(y), t));
    }
}

TEST_CASE("l1_dist equals BFS distance in the neighbors graph") {
  Box h = box2(0, 0, 7, 6);
  Point src{3, 2};
  Grid<i64> dist(h, -1);
  std::vector<Point> frontier{src};
  dist.at(src) = 0;
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& p : frontier)
      for (const auto& q : neighbors(p, h))
        if (dist.at(q) < 0) {
          dist.at(q) = dist.at(p) + 1;
          next.push_back(q);
        }
    frontier = std::move(next);
  }
  for_each_point(h, [&](const Point& p) {
    CHECK(dist.at(p) == l1_dist(src, p));
  });
}

TEST_CASE("box index round trip and torus wrap") {
  Box t = box2(-2, -3, 5, 4, Topology::Torus);
  for (i64 i = 0; i < t.cell_count(); ++i)
    CHECK(t.index(t.point_at(i)) == i);
  CHECK(t.index(Point{6, 5}) == t.index(Point{-2, -3}));
  Box h = box2(0, 0, 3, 3);
  CHECK_THROWS_AS(h.index(Point{4, 0}), UsageError);
  CHECK_THROWS_AS(Box(Point{0, 0}, Point{1, 5}, Topology::Torus), UsageError);
}

TEST_CASE("checked arithmetic traps overflow") {
  CHECK_THROWS_AS(checked_add(std::numeric_limits<i64>::max(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<i64>::max() / 2, 3), OverflowError);
  CHECK(checked_add(2, 3) == 5);
}
