#include <random>

#include "doctest.h"
#include "negglue/assembly.hpp"
#include "negglue/errors.hpp"
#include "negglue/glue.hpp"

using namespace negglue;

namespace {

StrengthTable fig1_strengths() {
  StrengthTable s;
  s.set("X", 2);
  s.set("Y", 1);
  s.set("Z", 2);
  s.set("N", -1);
  return s;
}

}  // namespace

TEST_CASE("glue base is the leading alphabetic run") {
  CHECK(glue_base("J3") == "J");
  CHECK(glue_base("f*") == "f*");
  CHECK(glue_base("h^") == "h");
  CHECK(glue_base("Vq!") == "Vq");
  CHECK(GlueLabel("u12").base() == "u");
  CHECK(GlueLabel("cap!").infinite());
  CHECK_THROWS_AS(GlueLabel(""), Error);
}

TEST_CASE("strength lookup resolves subscripts through the family") {
  StrengthTable s;
  s.set("J", 8);
  s.set("f*", 3);
  s.set("f", 2);
  CHECK(s.lookup("J3") == 8);
  CHECK(s.lookup("f*") == 3);
  CHECK(s.lookup("f1") == 2);
  CHECK(s.lookup("anything!") == s.infinite_sentinel());
  CHECK_THROWS_AS(s.lookup("Q"), UnknownGlue);
}

TEST_CASE("canonicalize moves the row-major minimum to the origin") {
  PositionedAssembly a;
  a.place({5, 7}, make_tile("A", "-", "-", "-"));
  auto c = canonicalize(a);
  REQUIRE(c.size() == 1);
  CHECK(c.canonical().contains({0, 0}));
  CHECK(canonicalize(c.canonical()) == c);
  CHECK_THROWS_AS(canonicalize(PositionedAssembly{}), EmptyAssembly);
}

TEST_CASE("canonical form is translation invariant") {
  std::mt19937 rng(7);
  const char* names[] = {"A", "X", "J1", "D", "-"};
  PositionedAssembly a;
  std::uniform_int_distribution<int> coord(-4, 4), pick(0, 4);
  while (a.size() < 10) {
    a.place({coord(rng), coord(rng)},
            make_tile(names[pick(rng)], names[pick(rng)], names[pick(rng)], names[pick(rng)]));
  }
  auto ref = canonicalize(a);
  std::uniform_int_distribution<int> off(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    auto moved = canonicalize(a.translated({off(rng), off(rng)}));
    CHECK(moved == ref);
    CHECK(moved.hash() == ref.hash());
  }
}

TEST_CASE("bond graph of the 2x2 example") {
  PositionedAssembly a;
  a.place({0, 0}, make_tile("-", "X", "Y", "-"));
  a.place({1, 0}, make_tile("-", "-", "Z", "X"));
  a.place({0, 1}, make_tile("Y", "N", "-", "-"));
  a.place({1, 1}, make_tile("Z", "-", "-", "N"));
  auto g = bond_graph(a, fig1_strengths());
  CHECK(g.edges.size() == 4);
  CHECK(g.weight({0, 0}, {1, 0}) == 2);
  CHECK(g.weight({0, 0}, {0, 1}) == 1);
  CHECK(g.weight({1, 0}, {1, 1}) == 2);
  CHECK(g.weight({0, 1}, {1, 1}) == -1);
  CHECK(g.weight({1, 1}, {0, 1}) == -1);
}

TEST_CASE("mismatched glue names give a zero edge") {
  PositionedAssembly a;
  a.place({0, 0}, make_tile("-", "J1", "-", "-"));
  a.place({1, 0}, make_tile("-", "-", "-", "J2"));
  StrengthTable s;
  s.set("J", 8);
  auto g = bond_graph(a, s);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].weight == 0);
}

TEST_CASE("shape_of and scale") {
  PositionedAssembly a;
  a.place({3, 3}, make_tile("-", "-", "-", "-"));
  a.place({4, 3}, make_tile("-", "-", "-", "-"));
  a.place({3, 4}, make_tile("-", "-", "-", "-"));
  Shape l = shape_of(a);
  CHECK(l.size() == 3);
  CHECK(l.is_connected());
  CHECK(l.cells().count({1, 0}));
  Shape one(std::set<Vec2>{{0, 0}});
  CHECK(scale(one, 2).size() == 4);
  CHECK(scale(l, 24).size() == 576 * 3);
  CHECK(scale(scale(l, 2), 3) == scale(l, 6));
  CHECK_THROWS_AS(scale(l, 0), InvalidScale);
  CHECK_FALSE(Shape({{0, 0}, {2, 0}}).is_connected());
}

TEST_CASE("rotation keeps glues attached to the turned sides") {
  Tile t = make_tile("N1", "E1", "S1", "W1");
  Tile r = t.rotated_cw(1);
  CHECK(glue_name(r.glue(Side::East)) == "N1");
  CHECK(glue_name(r.glue(Side::South)) == "E1");
  CHECK(t.rotated_cw(4) == t);
  CHECK(t.type_id() == make_tile("N1", "E1", "S1", "W1").type_id());
  CHECK(t.type_id() != r.type_id());
}
