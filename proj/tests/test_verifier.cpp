#include "doctest.h"
#include "negglue/compiler.hpp"
#include "negglue/errors.hpp"
#include "negglue/gadgets.hpp"
#include "negglue/verifier.hpp"

using namespace negglue;

namespace {

CompiledSystem compiled(const char* text) { return compile(parse_shape(text), build_default_library()); }

Gadget* find_mut(GadgetLibrary& lib, const std::string& name) {
  for (auto& g : lib.gadgets)
    if (g.name == name) return &g;
  return nullptr;
}

}  // namespace

TEST_CASE("frozen garbage bound equals the library's largest detachment") {
  CHECK(measured_garbage_bound(build_default_library()) == kFrozenGarbageBound);
}

TEST_CASE("domino audit passes and breaks once per instruction plus the overlay") {
  auto cs = compiled("##");
  auto r = audit_run(cs);
  CHECK(r.pass());
  CHECK(r.trace_divergences.empty());
  CHECK(r.terminal_shape_match);
  CHECK(r.break_count == cs.seq.moves.size() + 1);
  CHECK(r.max_detached_piece <= r.c_garbage);
  CHECK(shape_of(r.final_assembly) == scale(parse_shape("##"), 24));
}

TEST_CASE("break count grows linearly with the instruction count") {
  for (const char* text : {"#", "##", "#.\n##", "##\n##"}) {
    auto cs = compiled(text);
    auto r = audit_run(cs);
    CAPTURE(text);
    CHECK(r.pass());
    CHECK(r.break_count == cs.seq.moves.size() + 1);
    // read, walk and extend per instruction plus the overlay combine
    CHECK(r.combine_count == 3 * cs.seq.moves.size() + 1);
  }
}

TEST_CASE("audit step strengths") {
  auto r = audit_run(compiled("#"));
  REQUIRE(r.pass());
  for (const auto& e : r.log) {
    CAPTURE(e.line());
    if (e.phase == "overlay" || e.phase == "read")
      CHECK(e.event.strength == (e.event.kind == TraceStep::Kind::Combine ? 9 + 5 + 5 - 7 : -7 + 9 + 4));
    if (e.phase == "reduce") CHECK(e.event.strength == -7 + 9 + 4);
    if (e.phase == "walk") CHECK(e.event.strength == 9 + 4);
    if (e.phase == "extend") CHECK(e.event.strength == 5 + 5);
    if (e.event.kind == TraceStep::Kind::Break) CHECK(e.event.detached == 12);
  }
}

TEST_CASE("corrupted D strength diverges at a read-detach") {
  auto cs = compiled("##");
  cs.system.strengths.set("D", -1);
  auto r = audit_run(cs);
  CHECK_FALSE(r.pass());
  REQUIRE_FALSE(r.trace_divergences.empty());
  CHECK(r.trace_divergences.front().find("read-detach") != std::string::npos);
}

TEST_CASE("wrong reader does not attach") {
  auto cs = compiled("#");
  // swap the F and R readers
  auto* f = find_mut(cs.system, "read.F");
  auto* r = find_mut(cs.system, "read.R");
  std::swap(f->body, r->body);
  auto rep = audit_run(cs);
  CHECK_FALSE(rep.pass());
  REQUIRE_FALSE(rep.trace_divergences.empty());
  CHECK(rep.trace_divergences.front().find("below tau") != std::string::npos);
}

TEST_CASE("fig1 demo combines at 1 and breaks at 0") {
  auto d = fig1_demo();
  REQUIRE(d.events.size() == 2);
  CHECK(d.events[0].strength == 2 - 1);
  CHECK(d.events[0].strength >= d.cfg.tau);
  CHECK(d.combined.size() == 4);
  CHECK(d.events[1].strength == 1 - 1);
  REQUIRE(d.pieces.size() == 2);
  // the tile carrying Y and N falls out of the square, the rest stays
  std::size_t small = d.pieces[0].size() == 1 ? 0 : 1;
  REQUIRE(d.pieces[small].size() == 1);
  CHECK(d.pieces[1 - small].size() == 3);
  const auto& [pos, tile] = *d.pieces[small].tiles().begin();
  CHECK(pos == Vec2{0, 1});
  CHECK(glue_name(tile.glue(Side::North)) == "Y");
  CHECK(glue_name(tile.glue(Side::East)) == "N");
}

TEST_CASE("single-cell probe saturates without violations") {
  auto pr = adversarial_probe(compiled("#"), 1000);
  CHECK(pr.pass);
  CHECK(pr.violations.empty());
  CHECK(pr.frontier_hits > 0);
}

TEST_CASE("probe reports a horizon that is too small as inconclusive") {
  CHECK_THROWS_AS(adversarial_probe(compiled("#"), 3), InconclusiveVerdict);
}

TEST_CASE("rogue strength-10 glue pair produces a violation witness") {
  auto cs = compiled("#");
  cs.system.strengths.set("Zr", 10);
  auto* b0 = find_mut(cs.system, "block.0");
  REQUIRE(b0);
  Vec2 corner = b0->body.min_coord();
  Tile t = *b0->body.at(corner);
  REQUIRE(t.glue(Side::North) == kNoGlue);
  t.glues[static_cast<int>(Side::North)] = intern_glue("Zr");
  b0->body.erase(corner);
  b0->body.place(corner, t);
  PositionedAssembly rogue;
  rogue.place({0, 0}, make_tile("-", "-", "Zr", "-"));
  cs.system.gadgets.push_back({"rogue", GadgetCategory::Buffer, "none", 0, rogue});
  auto pr = adversarial_probe(cs, 1000);
  CHECK_FALSE(pr.pass);
  REQUIRE_FALSE(pr.violations.empty());
  CHECK(pr.violations.front().size() > pr.c_garbage);
}

TEST_CASE("fig1 demo log is deterministic") {
  auto lines = [] {
    std::string out;
    for (const auto& e : fig1_demo().events) out += e.line() + "\n";
    return out;
  };
  CHECK(lines() == lines());
}

TEST_CASE("every state of the fig1 system reaches the broken pieces") {
  auto d = fig1_demo();
  std::vector<Assembly> frontier;
  for (const auto& p : d.pieces) frontier.push_back(canonicalize(p));
  auto pr = adversarial_probe(d.cfg, frontier, shape_of(d.pieces[0]), 0, 100, 8);
  CHECK(pr.pass);
  CHECK(pr.explored >= 4);
}
