#include <doctest.h>

#include <map>

#include "negglue/errors.hpp"
#include "negglue/strengths.hpp"

using namespace negglue;

TEST_CASE("table lookups") {
  auto s = default_strengths();
  CHECK(s.lookup("D") == -7);
  CHECK(s.lookup("J3") == 8);
  CHECK(s.lookup("o") == -5);
  CHECK(s.lookup("Q") == -4);
  CHECK(s.lookup("f*") == 3);
  CHECK(s.lookup("h^") == 2);
  CHECK(s.lookup("Vq!") == kInfiniteStrength);
  CHECK_THROWS_AS(s.lookup("y"), UnknownGlue);
}

TEST_CASE("published families are unchanged by the additions") {
  auto base = table1_strengths();
  auto full = default_strengths();
  CHECK(base.entries().size() == 50);
  for (const auto& [k, v] : base.entries()) CHECK(full.lookup(k) == v);
  CHECK(full.lookup("n") == 2);
  CHECK(full.lookup("I") == 5);
  CHECK(full.lookup("h*") == 3);
}

TEST_CASE("sentinel dominates every finite cut") {
  auto s = default_strengths();
  CHECK(kInfiniteStrength > 10 + s.total_absolute());
}

TEST_CASE("inequality rows hold at tau 10") {
  // Hand-written strengths, independent of the library table.
  const std::map<std::string, int> v{
      {"F", 1}, {"L", 1}, {"R", 1}, {"M", 1}, {"A", 2}, {"X", 2}, {"p", 2}, {"w", 2}, {"h", 2},
      {"h^", 2}, {"n", 2}, {"f", 2}, {"B", 3}, {"b", 3}, {"e", 3}, {"f*", 3}, {"h*", 3},
      {"C", 4}, {"a", 4}, {"E", 5}, {"S", 5}, {"W", 5}, {"i", 5}, {"q", 5}, {"I", 5},
      {"O", 7}, {"T", 7}, {"G", 8}, {"H", 8}, {"J", 8}, {"U", 8}, {"m", 8}, {"s", 8},
      {"t", 8}, {"u", 8}, {"K", 9}, {"P", 9}, {"V", 9}, {"Y", 9}, {"Z", 9}, {"Q", -4},
      {"o", -5}, {"D", -7}};
  auto rep = verify_inequalities(default_strengths(), 10);
  CHECK(rep.pass);
  CHECK(rep.strong_glues.empty());
  CHECK(rep.rows.size() == 72);
  for (const auto& r : rep.rows) {
    int sum = 0;
    for (const auto& l : r.row.lhs) sum += v.at(l);
    CHECK(sum == r.value);
    CHECK(r.holds);
  }
  auto value_of = [&](const std::string& text) {
    for (const auto& r : rep.rows)
      if (r.row.text() == text) return r.value;
    FAIL("missing row " << text);
    return 0;
  };
  CHECK(value_of("t + h^ >= tau") == 10);
  CHECK(value_of("u + u + e + o + o < tau") == 9);
  CHECK(value_of("F + F + M + n + T + F + Q < tau") == 9);
  CHECK(value_of("J + A + A + F + F + D < tau") == 7);
  CHECK(value_of("C + F + X + G + D < tau") == 8);
}

TEST_CASE("a weakened repulsive glue breaks a detachment row") {
  auto s = default_strengths();
  s.set("D", -1);
  auto rep = verify_inequalities(s, 10);
  CHECK_FALSE(rep.pass);
  s = default_strengths();
  s.set("Z", 10);
  rep = verify_inequalities(s, 10);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.strong_glues.size() == 1);
  CHECK(rep.strong_glues[0].first == "Z");
}

TEST_CASE("missing family is reported, not thrown") {
  auto rep = verify_inequalities(table1_strengths(), 10);
  CHECK_FALSE(rep.pass);
  CHECK(!rep.unresolved.empty());
}
