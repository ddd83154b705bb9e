#include <cstdlib>
#include <set>

#include "doctest.h"
#include "negglue/compiler.hpp"
#include "negglue/errors.hpp"
#include "negglue/gadgets.hpp"

using namespace negglue;

namespace {

const char* const kShapes[] = {"#", "##", "#.\n##", "##\n##", "###\n.#.", ".#.\n###\n.#.\n##."};

std::set<Vec2> doubled(const Shape& sh) {
  std::set<Vec2> out;
  for (Vec2 c : sh.cells())
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) out.insert({2 * c.x + dx, 2 * c.y + dy});
  return out;
}

// Turn letter from two unit steps in y-down coordinates.
char turn(Vec2 a, Vec2 b) {
  if (a == b) return 'F';
  int cross = a.x * b.y - a.y * b.x;
  return cross > 0 ? 'R' : 'L';
}

}  // namespace

TEST_CASE("parse_shape reads '#' cells and rejects bad input") {
  Shape l = parse_shape("#.\n##\n");
  CHECK(l.cells() == std::set<Vec2>{{0, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(parse_shape("...\n"), EmptyShape);
  CHECK_THROWS_AS(parse_shape("#.#"), DisconnectedShape);
  CHECK_THROWS_AS(parse_shape("#x"), LoadError);
  CHECK(parse_shape(shape_text(l)) == l);
}

TEST_CASE("shapes are anchored at the top row's leftmost cell") {
  Shape a = parse_shape(".#\n##");
  CHECK(first_cell(a) == Vec2{0, 0});
  CHECK(a.cells() == std::set<Vec2>{{0, 0}, {-1, 1}, {0, 1}});
  CHECK(first_cell(parse_shape("..#\n###")) == Vec2{0, 0});
}

TEST_CASE("spanning tree of the square follows N E S W preference") {
  auto t = spanning_tree(parse_shape("##\n##"));
  REQUIRE(t.edges.size() == 3);
  CHECK(t.edges[0] == std::pair<Vec2, Vec2>{{0, 0}, {1, 0}});
  CHECK(t.edges[1] == std::pair<Vec2, Vec2>{{1, 0}, {1, 1}});
  CHECK(t.edges[2] == std::pair<Vec2, Vec2>{{1, 1}, {0, 1}});
}

TEST_CASE("single cell outline is FRR") {
  auto seq = tree_outline_instructions(parse_shape("#"));
  CHECK(seq.text() == "FRR");
  CHECK(seq.start == Vec2{0, 0});
}

TEST_CASE("outline covers the scale-2 shape once with 4|S|-1 moves") {
  for (const char* text : kShapes) {
    CAPTURE(text);
    Shape sh = parse_shape(text);
    auto seq = tree_outline_instructions(sh);
    CHECK(seq.moves.size() == 4 * sh.size() - 1);
    auto cells = walk_cells(seq);
    REQUIRE(cells.size() == 4 * sh.size());
    std::set<Vec2> seen(cells.begin(), cells.end());
    CHECK(seen.size() == cells.size());
    CHECK(seen == doubled(sh));

    std::vector<Vec2> steps{{1, 0}};
    for (std::size_t i = 1; i < cells.size(); ++i) {
      Vec2 d = cells[i] - cells[i - 1];
      CHECK(std::abs(d.x) + std::abs(d.y) == 1);
      steps.push_back(d);
    }
    std::string oracle;
    for (std::size_t i = 1; i < steps.size(); ++i) oracle += turn(steps[i - 1], steps[i]);
    CHECK(seq.text() == oracle);
    Vec2 closing = cells.front() - cells.back();
    CHECK(std::abs(closing.x) + std::abs(closing.y) == 1);
  }
}

TEST_CASE("domino tour") {
  auto seq = tree_outline_instructions(parse_shape("##"));
  auto cells = walk_cells(seq);
  std::vector<Vec2> expect{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {2, 1}, {1, 1}, {0, 1}};
  CHECK(cells == expect);
  CHECK(seq.text() == "FFFRRFF");
}

TEST_CASE("move bits") {
  CHECK(move_bits(Move::F) == std::pair<int, int>{0, 0});
  CHECK(move_bits(Move::L) == std::pair<int, int>{0, 1});
  CHECK(move_bits(Move::R) == std::pair<int, int>{1, 0});
}

TEST_CASE("tape has one unit per instruction plus marker and cap") {
  auto lib = build_default_library();
  for (const char* text : kShapes) {
    auto seq = tree_outline_instructions(parse_shape(text));
    auto tape = instructions_to_tape(seq, lib);
    const std::size_t n = seq.moves.size();
    CHECK(tape.sections == n);
    CHECK(tape.assembly.size() == 6 * (n + 1) + 2);
    CHECK(tape.unit_origins.size() == n + 2);
  }
}

TEST_CASE("base conversion plan") {
  auto p = base_conversion_plan(1024);
  CHECK(p.b == 103);  // ceil(1024 / 10)
  CHECK(p.d == 171);  // ceil(1024 / floor(log2 103) = 6)
  auto q = base_conversion_plan(64);
  CHECK(q.b == 11);
  CHECK(q.d == 22);
  auto s = base_conversion_plan(4);
  CHECK(s.b == 2);
  CHECK(s.d == 4);
  CHECK(system_bit_encoding_size(1, 1) == 9);
  CHECK(system_bit_encoding_size(4, 10) == 16 * 4 + 4);
}

TEST_CASE("description bits are the bounding-box area") {
  CHECK(description_bits(parse_shape("#")) == 1);
  CHECK(description_bits(parse_shape("###\n.#.")) == 6);
}

TEST_CASE("compile targets scale 24") {
  auto cs = compile(parse_shape("#.\n##"), build_default_library());
  CHECK(cs.target == scale(cs.input, 24));
  CHECK(cs.target.size() == 576 * 3);
  CHECK(cs.path.size() == 12);
  CHECK(cs.exits.size() == cs.seq.moves.size());
  for (std::size_t j = 0; j < cs.path.size(); ++j) CHECK(cs.system.find(cs.block_name(j)) != nullptr);
  CHECK(cs.policy.c_garbage == kFrozenGarbageBound);
}

TEST_CASE("compiled system round-trips through text") {
  auto cs = compile(parse_shape("###\n.#."), build_default_library());
  auto text = serialize_compiled(cs);
  auto back = parse_compiled(text, "mem");
  CHECK(serialize_compiled(back) == text);
  CHECK(back.target == cs.target);
  CHECK(back.tape.assembly == cs.tape.assembly);
}

TEST_CASE("corrupted system text is rejected") {
  auto cs = compile(parse_shape("##"), build_default_library());
  auto text = serialize_compiled(cs);
  auto bad = text;
  bad.replace(bad.find("instructions FFFRRFF"), 20, "instructions FFFRRFL");
  CHECK_THROWS_AS(parse_compiled(bad, "mem"), LoadError);
  CHECK_THROWS_AS(parse_compiled(text.substr(0, text.find("[tape]")), "mem"), LoadError);
  CHECK_THROWS_AS(parse_compiled("garbage\n", "mem"), LoadError);
}
