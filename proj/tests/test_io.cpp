#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "toastkit/io.hpp"

using namespace toastkit;

TEST_CASE("toast round trip") {
  Box box(Point{-5, -5}, Point{40, 40});
  Toast t = make_toast(
      {Rect(Point{0, 0}, Point{9, 9}), Rect(Point{20, 20}, Point{29, 29})}, 4,
      box);
  std::stringstream ss;
  write_toast(ss, t);
  RawToast raw = read_toast(ss);
  CHECK(raw.q == 4);
  CHECK(raw.box.lo == box.lo);
  CHECK(raw.box.hi == box.hi);
  CHECK(raw.box.topology == Topology::HardBoundary);
  REQUIRE(raw.pieces.size() == 2);
  CHECK(raw.pieces[0] == t.pieces[0]);
  CHECK(raw.pieces[1] == t.pieces[1]);
  CHECK(validate_toast(raw.pieces, raw.q, raw.box).ok());
}

TEST_CASE("toast writing is byte stable") {
  Box box(Point{0, 0}, Point{17, 17}, Topology::Torus);
  Toast t = make_toast({Rect(Point{2, 2}, Point{8, 8})}, 4, box);
  std::stringstream a, b;
  write_toast(a, t);
  write_toast(b, t);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 1) == "{");
}

TEST_CASE("labeling round trip") {
  Box box(Point{-1, -2}, Point{2, 3});
  Labeling f(box, "RBG", 'G');
  f.set(Point{0, 0}, 'R');
  f.set(Point{0, 1}, 'B');
  std::stringstream ss;
  write_labeling(ss, f);
  const std::string text = ss.str();
  CHECK(text.rfind("n=2 lo=-1,-2 hi=2,3 topology=hard alphabet=R,B,G\n", 0) ==
        0);
  std::stringstream in(text);
  Labeling g = read_labeling(in);
  CHECK(g.alphabet == "RBG");
  CHECK(g.cells == f.cells);
  CHECK(g.box.lo == box.lo);
}

TEST_CASE("labeling rejects characters outside the alphabet") {
  std::stringstream in(
      "n=1 lo=0 hi=2 topology=hard alphabet=0,1\n0X1\n");
  CHECK_THROWS_AS(read_labeling(in), UsageError);
}

TEST_CASE("field round trip bits and reals") {
  Box box(Point{0, 0}, Point{10, 6});
  for (auto kind : {RandomField::Kind::Bits, RandomField::Kind::Reals}) {
    RandomField f = gen_field(box, kind, 12345);
    std::stringstream ss;
    write_field(ss, f);
    RandomField g = read_field(ss);
    CHECK(g.kind == f.kind);
    CHECK(g.seed == f.seed);
    CHECK(g.bits == f.bits);
    CHECK(g.numer == f.numer);
  }
}

TEST_CASE("triple round trip") {
  Box box(Point{0, 0}, Point{4, 4});
  Labeling f(box, "RB01", '0');
  Labeling h1(box, "01", '0');
  Labeling h2(box, "01", '1');
  f.set(Point{1, 1}, 'R');
  h1.set(Point{2, 2}, '1');
  std::stringstream ss;
  write_triple(ss, f, h1, h2);
  auto parts = read_triple(ss);
  CHECK(parts[0].cells == f.cells);
  CHECK(parts[1].cells == h1.cells);
  CHECK(parts[2].cells == h2.cells);
}

TEST_CASE("violations csv") {
  std::stringstream ss;
  write_violations_csv(
      ss, {{Point{3, 4}, "C2", "adjacent equal colors"},
           {Point{0, 0}, "rt-window", "window not extendable"}});
  CHECK(ss.str() ==
        "anchor,tag,reason\n(3 4),C2,adjacent equal colors\n(0 0),rt-window,"
        "window not extendable\n");
}
