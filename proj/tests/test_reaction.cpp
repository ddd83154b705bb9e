#include <random>

#include "doctest.h"
#include "negglue/errors.hpp"
#include "negglue/reaction.hpp"

using namespace negglue;

namespace {

SystemConfig fig1_config() {
  SystemConfig cfg;
  cfg.tau = 1;
  cfg.strengths.set("X", 2);
  cfg.strengths.set("Y", 1);
  cfg.strengths.set("Z", 2);
  cfg.strengths.set("N", -1);
  return cfg;
}

PositionedAssembly fig1_three() {
  PositionedAssembly a;
  a.place({0, 0}, make_tile("-", "X", "Y", "-"));
  a.place({1, 0}, make_tile("-", "-", "Z", "X"));
  a.place({0, 1}, make_tile("Y", "N", "-", "-"));
  return a;
}

Tile fig1_single() { return make_tile("Z", "-", "-", "N"); }

// Independent oracle: every subset containing tile 0, both sides checked for
// positive connectivity by flood fill over the plain grid.
struct OracleCut {
  std::set<Vec2> side;
  int strength;
};

std::vector<OracleCut> brute_force_cuts(const PositionedAssembly& a, const StrengthTable& s) {
  std::vector<Vec2> cells;
  for (const auto& [p, _] : a.tiles()) cells.push_back(p);
  const std::size_t n = cells.size();
  auto connected = [&](const std::set<Vec2>& part) {
    if (part.empty()) return false;
    std::set<Vec2> seen{*part.begin()};
    std::vector<Vec2> todo{*part.begin()};
    while (!todo.empty()) {
      Vec2 p = todo.back();
      todo.pop_back();
      for (Side d : kSides) {
        Vec2 q = p + step(d);
        if (!part.count(q) || seen.count(q)) continue;
        if (facing_strength(*a.at(p), *a.at(q), d, s) > 0) {
          seen.insert(q);
          todo.push_back(q);
        }
      }
    }
    return seen.size() == part.size();
  };
  std::vector<OracleCut> out;
  for (std::uint32_t m = 1; m < (1u << n); m += 2) {
    std::set<Vec2> in, rest;
    for (std::size_t i = 0; i < n; ++i) ((m >> i) & 1 ? in : rest).insert(cells[i]);
    if (rest.empty() || !connected(in) || !connected(rest)) continue;
    int w = 0;
    for (Vec2 p : in)
      for (Side d : kSides)
        if (rest.count(p + step(d))) w += facing_strength(*a.at(p), *a.at(p + step(d)), d, s);
    out.push_back({in, w});
  }
  return out;
}

PositionedAssembly random_assembly(std::mt19937& rng, std::size_t n) {
  static const char* labels[] = {"F", "A", "B", "C", "N", "d", "O", "J", "K", "Q", "o", "D", "-", "-"};
  std::uniform_int_distribution<int> pick(0, 13), dir(0, 3);
  PositionedAssembly a;
  a.place({0, 0}, Tile{});
  std::vector<Vec2> cells{{0, 0}};
  while (a.size() < n) {
    Vec2 from = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
    Vec2 to = from + step(kSides[dir(rng)]);
    if (a.contains(to)) continue;
    a.place(to, Tile{});
    cells.push_back(to);
  }
  // Glues are assigned per edge so that neighbours usually match.
  PositionedAssembly out;
  std::map<Vec2, Tile> tiles;
  for (Vec2 p : cells) tiles[p] = Tile{};
  for (Vec2 p : cells)
    for (Side d : {Side::East, Side::South}) {
      Vec2 q = p + step(d);
      if (!tiles.count(q)) continue;
      GlueId g = intern_glue(labels[pick(rng)]);
      tiles[p].glues[static_cast<int>(d)] = g;
      GlueId h = pick(rng) < 2 ? intern_glue(labels[pick(rng)]) : g;
      tiles[q].glues[static_cast<int>(opposite(d))] = h;
    }
  return PositionedAssembly(PositionedAssembly::Map(tiles.begin(), tiles.end()));
}

}  // namespace

TEST_CASE("attachment and detachment example at temperature 1") {
  auto cfg = fig1_config();
  auto three = canonicalize(fig1_three());
  PositionedAssembly one;
  one.place({0, 0}, fig1_single());
  auto combos = combinations(three, canonicalize(one), cfg);
  REQUIRE(combos.size() == 1);
  CHECK(combos[0].strength == 1);
  CHECK(combos[0].result.size() == 4);
  CHECK_FALSE(is_tau_stable(combos[0].result, cfg).stable);

  auto breaks = find_breaks(combos[0].result, cfg);
  REQUIRE(breaks.size() == 1);
  CHECK(breaks[0].first.size() == 1);
  CHECK(breaks[0].second.size() == 3);
  auto cuts = enumerate_cuts(combos[0].result, cfg);
  int below = 0;
  for (const auto& c : cuts.cuts)
    if (c.strength < cfg.tau) {
      ++below;
      CHECK(c.strength == 0);
    }
  CHECK(below == 1);
}

TEST_CASE("single tile is vacuously stable") {
  SystemConfig cfg;
  cfg.strengths.set("A", 2);
  PositionedAssembly a;
  a.place({0, 0}, make_tile("A", "-", "-", "-"));
  auto v = is_tau_stable(a, cfg);
  CHECK(v.stable);
  CHECK(enumerate_cuts(canonicalize(a), cfg).cuts.empty());
}

TEST_CASE("infinite bonds are never cut") {
  SystemConfig cfg;
  PositionedAssembly a;
  a.place({0, 0}, make_tile("-", "bar!", "-", "-"));
  a.place({1, 0}, make_tile("-", "-", "-", "bar!"));
  CHECK(is_tau_stable(a, cfg).stable);
  CHECK(find_breaks(canonicalize(a), cfg).empty());
}

TEST_CASE("exact mode refuses large assemblies") {
  SystemConfig cfg;
  cfg.exact_limit = 3;
  PositionedAssembly a;
  for (int x = 0; x < 4; ++x) a.place({x, 0}, Tile{});
  CHECK_THROWS_AS(enumerate_cuts_exact(a, cfg), TooLargeForExact);
}

TEST_CASE("no matching glue means no combination") {
  SystemConfig cfg;
  cfg.strengths.set("J", 8);
  PositionedAssembly a, b;
  a.place({0, 0}, make_tile("J1", "J1", "J1", "J1"));
  b.place({0, 0}, make_tile("J2", "J2", "J2", "J2"));
  CHECK(combinations(canonicalize(a), canonicalize(b), cfg).empty());
}

TEST_CASE("bounded and exhaustive cut sets agree on small random assemblies") {
  SystemConfig cfg;
  for (auto [k, v] : std::map<std::string, int>{{"F", 1}, {"A", 2}, {"B", 3}, {"C", 4}, {"N", 5}, {"d", 6},
                                                 {"O", 7}, {"J", 8}, {"K", 9}, {"Q", -4}, {"o", -5}, {"D", -7}})
    cfg.strengths.set(k, v);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_assembly(rng, 2 + trial % 7);
    auto oracle = brute_force_cuts(a, cfg.strengths);
    auto bounded = enumerate_cuts_bounded(a, cfg, 1000);
    REQUIRE(bounded.cuts.size() == oracle.size());
    std::multiset<int> ws, wo;
    for (auto& c : bounded.cuts) ws.insert(c.strength);
    for (auto& c : oracle) wo.insert(c.strength);
    CHECK(ws == wo);
    auto exact = enumerate_cuts_exact(a, cfg);
    CHECK(exact.cuts.size() == oracle.size());
  }
}

TEST_CASE("combination output has a cut equal to the boundary strength") {
  SystemConfig cfg;
  cfg.strengths.set("J", 8);
  cfg.strengths.set("A", 2);
  PositionedAssembly a, b;
  a.place({0, 0}, make_tile("-", "J1", "A1", "-"));
  a.place({0, 1}, make_tile("A1", "A2", "-", "-"));
  b.place({0, 0}, make_tile("-", "-", "-", "J1"));
  b.place({0, 1}, make_tile("-", "-", "-", "A2"));
  auto combos = combinations(canonicalize(a), canonicalize(b), cfg);
  REQUIRE(combos.size() == 1);
  CHECK(combos[0].strength == 10);
  auto placed = b.translated(combos[0].offset);
  std::set<Vec2> piece;
  PositionedAssembly merged = a;
  for (const auto& [p, t] : placed.tiles()) {
    piece.insert(p);
    merged.place(p, t);
  }
  CHECK(cut_strength(merged, piece, cfg.strengths) == 10);
}

TEST_CASE("producible set of a lone non-self-matching tile") {
  SystemConfig cfg;
  cfg.strengths.set("A", 2);
  cfg.tiles.push_back(make_tile("A1", "-", "-", "-"));
  auto p = producible_set(cfg, 100, 10);
  CHECK(p.saturated);
  CHECK(p.assemblies.size() == 1);
}

TEST_CASE("example system: producible set and unique shape verdict") {
  auto cfg = fig1_config();
  cfg.supply.push_back({"three", fig1_three()});
  cfg.tiles.push_back(fig1_single());
  auto rg = explore(cfg, 1000, 8);
  CHECK(rg.saturated);
  std::size_t sizes[5] = {};
  for (auto& a : rg.assemblies) sizes[std::min<std::size_t>(a.size(), 4)]++;
  CHECK(sizes[4] >= 1);
  Shape square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto rep = check_unique_shape(cfg, square, 1, 1000, 8);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("terminal needs stability and no partner") {
  SystemConfig cfg;
  cfg.strengths.set("K", 9);
  cfg.strengths.set("A", 2);
  cfg.tau = 10;
  PositionedAssembly a, b;
  a.place({0, 0}, make_tile("-", "K1", "-", "-"));
  b.place({0, 0}, make_tile("-", "-", "-", "K1"));
  auto ca = canonicalize(a);
  CHECK(is_terminal(ca, cfg, {canonicalize(b)}));
  cfg.strengths.set("K", 10);
  CHECK_FALSE(is_terminal(ca, cfg, {canonicalize(b)}));
}
