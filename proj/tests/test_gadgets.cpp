#include <doctest.h>

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "negglue/errors.hpp"
#include "negglue/gadgets.hpp"

using namespace negglue;

namespace {

const GadgetLibrary& lib() {
  static const GadgetLibrary l = build_default_library();
  return l;
}

// Hand-written family strengths, independent of the library table.
int oracle_strength(const std::string& label) {
  static const std::map<std::string, int> v{
      {"F", 1}, {"L", 1}, {"R", 1}, {"M", 1}, {"A", 2}, {"X", 2}, {"p", 2}, {"w", 2}, {"h", 2},
      {"h^", 2}, {"n", 2}, {"f", 2}, {"B", 3}, {"b", 3}, {"e", 3}, {"f*", 3}, {"h*", 3},
      {"C", 4}, {"a", 4}, {"E", 5}, {"S", 5}, {"W", 5}, {"i", 5}, {"q", 5}, {"I", 5},
      {"O", 7}, {"T", 7}, {"G", 8}, {"H", 8}, {"J", 8}, {"U", 8}, {"m", 8}, {"s", 8},
      {"t", 8}, {"u", 8}, {"K", 9}, {"P", 9}, {"V", 9}, {"Y", 9}, {"Z", 9}, {"Q", -4},
      {"o", -5}, {"D", -7}};
  std::string base = label;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
  return v.at(base);
}

int oracle_sum(const std::string& expr) {
  int sum = 0;
  std::stringstream ss(expr);
  std::string term;
  while (std::getline(ss, term, '+')) sum += oracle_strength(term);
  return sum;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string without_block(const std::string& text, const std::string& header_prefix) {
  std::stringstream in(text);
  std::string line, out;
  bool skipping = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '[') skipping = line.rfind(header_prefix, 0) == 0;
    if (!skipping) out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("shipped library file matches the built-in library") {
  CHECK(read_file(default_gadget_path()) == serialize_gadgets(lib()));
  auto loaded = load_gadgets(default_gadget_path());
  CHECK(loaded.gadgets.size() == lib().gadgets.size());
  CHECK(loaded.traces.size() == lib().traces.size());
  CHECK(serialize_gadgets(loaded) == serialize_gadgets(lib()));
}

TEST_CASE("every category is represented") {
  std::set<GadgetCategory> seen;
  for (const auto& g : lib().gadgets) seen.insert(g.category);
  CHECK(seen.size() == kGadgetCategoryCount);
  for (int i = 0; i < kGadgetCategoryCount; ++i) {
    auto c = static_cast<GadgetCategory>(i);
    CHECK(parse_category(category_name(c)) == c);
  }
}

TEST_CASE("every trace replays with the scripted strengths") {
  for (const auto& t : lib().traces) {
    INFO(t.name);
    auto events = replay(t, lib());
    CHECK(events.size() == t.steps.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
      CHECK(events[i].strength == t.steps[i].expected);
      if (events[i].kind == TraceStep::Kind::Combine)
        CHECK(events[i].strength >= lib().tau);
      else
        CHECK(events[i].strength < lib().tau);
    }
  }
}

TEST_CASE("written glue sums agree with an independent strength table") {
  int checked = 0;
  for (const auto& t : lib().traces) {
    auto events = replay(t, lib());
    for (const auto& ev : events) {
      if (ev.expression.empty()) continue;
      INFO(t.name << ": " << ev.expression);
      CHECK(oracle_sum(ev.expression) == ev.strength);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("library shape and trace landmarks") {
  const Gadget* init = lib().find("overlay.initiator");
  REQUIRE(init);
  bool exposes = false;
  for (const auto& [p, t] : init->body.tiles())
    for (Side s : kSides)
      if (glue_name(t.glue(s)) == "h^") exposes = true;
  CHECK(exposes);

  auto read = replay(*lib().find_trace("read"), lib());
  CHECK(read.back().kind == TraceStep::Kind::Break);
  CHECK(read.back().strength == 9);
  CHECK(read.back().detached == 6);

  std::size_t biggest = 0;
  for (const auto& t : lib().traces)
    for (const auto& ev : replay(t, lib())) biggest = std::max(biggest, ev.detached);
  CHECK(biggest == 16);
}

TEST_CASE("replay of an empty script is empty") {
  TraceScript empty{"nothing", {}};
  CHECK(replay(empty, lib()).empty());
  CHECK(replay_result(empty, lib()).empty());
}

TEST_CASE("a weaker repulsor makes the walk diverge") {
  GadgetLibrary weak = lib();
  weak.strengths.set("D", -1);
  CHECK_THROWS_AS(replay(*weak.find_trace("walk-forward"), weak), TraceDivergence);
  try {
    replay(*weak.find_trace("walk-forward"), weak);
  } catch (const TraceDivergence& e) {
    CHECK(e.step() == 4);
  }
}

TEST_CASE("placements") {
  auto p = parse_placement("walk.helper_1@-3,7");
  CHECK(p.gadget == "walk.helper_1");
  CHECK(p.offset == Vec2{-3, 7});
  CHECK(placement_text(p) == "walk.helper_1@-3,7");
  CHECK(parse_placement("x").offset == Vec2{0, 0});
  CHECK_THROWS_AS(parse_placement("x@1"), LoadError);
}

TEST_CASE("load errors") {
  const std::string text = serialize_gadgets(lib());
  SUBCASE("missing category") {
    std::string cut = without_block(text, "[gadget fill.initiator");
    CHECK_THROWS_AS(parse_gadgets(cut, "t"), LoadError);
    LoadOptions lax;
    lax.require_all_categories = false;
    CHECK_NOTHROW(parse_gadgets(without_block(cut, "[trace fill-lines"), "t", lax));
  }
  SUBCASE("trace names a missing gadget") {
    CHECK_THROWS_AS(parse_gadgets(without_block(text, "[gadget fill.initiator"), "t",
                                  LoadOptions{false, true}),
                    LoadError);
  }
  SUBCASE("unknown glue") {
    std::string bad = "[library]\ntau 10\n[strengths]\nA 2\n[gadget g buffer none]\n0 0 A B - -\n";
    CHECK_THROWS_AS(parse_gadgets(bad, "t", LoadOptions{false, true}), LoadError);
  }
  SUBCASE("unstable gadget") {
    std::string bad = "[library]\ntau 10\n[strengths]\nA 2\n[gadget g buffer none]\n0 0 - A - -\n1 0 - - - A\n";
    CHECK_THROWS_AS(parse_gadgets(bad, "t", LoadOptions{false, true}), LoadError);
    CHECK_NOTHROW(parse_gadgets(bad, "t", LoadOptions{false, false}));
  }
  SUBCASE("malformed rows") {
    CHECK_THROWS_AS(parse_gadgets("[library]\ntau x\n", "t", LoadOptions{false, true}), LoadError);
    CHECK_THROWS_AS(parse_gadgets("tau 10\n", "t", LoadOptions{false, true}), LoadError);
    CHECK_THROWS_AS(parse_gadgets("[gadget g nowhere none]\n", "t", LoadOptions{false, true}), LoadError);
  }
  CHECK_THROWS_AS(load_gadgets("/nonexistent/gadgets.txt"), LoadError);
}

TEST_CASE("trace catalog") {
  auto cat = trace_catalog();
  CHECK(cat.size() >= 12);
  for (const char* name : {"overlay", "read", "walk-forward", "extend-forward", "reduce", "extend-left", "walk-left",
                           "extend-right", "walk-right", "fill-lines", "fill-left", "fill-right"})
    CHECK(cat.count(name) == 1);
  CHECK(cat.at("read").steps.back().expected == 1 + 1 + 1 + 2 + 7 + 1 - 4);
  auto has_break = [&](const std::string& name, int value) {
    for (const auto& st : cat.at(name).steps)
      if (st.kind == TraceStep::Kind::Break && st.expected == value) return true;
    return false;
  };
  CHECK(has_break("extend-forward", 2 + 2 + 8 + 2 - 7));
  CHECK(has_break("walk-left", 5 + 7 + 1 - 4));
}
