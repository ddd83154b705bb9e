#include "negglue/strengths.hpp"

#include <sstream>

namespace negglue {

StrengthTable table1_strengths() {
  StrengthTable t;
  auto put = [&t](std::initializer_list<const char*> names, int v) {
    for (const char* n : names) t.set(n, v);
  };
  put({"F", "L", "R", "M"}, 1);
  put({"A", "X", "f", "k", "l", "r", "p", "w", "h"}, 2);
  put({"B", "b", "e", "f*"}, 3);
  put({"C", "a"}, 4);
  put({"N", "E", "S", "W", "i", "q"}, 5);
  put({"d"}, 6);
  put({"O", "T"}, 7);
  put({"G", "H", "J", "U", "c", "g", "j", "m", "s", "t", "u", "v", "x", "z"}, 8);
  put({"K", "P", "V", "Y", "Z"}, 9);
  put({"Q"}, -4);
  put({"o"}, -5);
  put({"D"}, -7);
  return t;
}

StrengthTable default_strengths() {
  StrengthTable t = table1_strengths();
  t.set("n", 2);   // n + T + F = 2 + 7 + 1
  t.set("I", 5);   // H + I = 8 + 5
  t.set("h*", 3);  // h + h* + i = 2 + 3 + 5
  t.set("l*", 3);  // overlay bits for L and R mirror f / f*
  t.set("r*", 3);
  return t;
}

std::string InequalityRow::text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lhs.size(); ++i) os << (i ? " + " : "") << lhs[i];
  os << (relation == Relation::AtLeastTau ? " >= tau" : " < tau");
  return os.str();
}

const std::vector<InequalityRow>& inequality_rows() {
  static const std::vector<InequalityRow> rows = [] {
    std::vector<InequalityRow> r;
    auto ge = [&r](const char* p, std::vector<std::string> l) {
      r.push_back({p, std::move(l), Relation::AtLeastTau});
    };
    auto lt = [&r](const char* p, std::vector<std::string> l) {
      r.push_back({p, std::move(l), Relation::BelowTau});
    };
    ge("overlay", {"t", "h^"});
    ge("overlay", {"h", "h*", "i"});
    ge("overlay", {"i", "q"});
    ge("overlay", {"f", "f*", "i"});
    ge("overlay", {"e", "w", "q"});

    ge("read", {"J", "A"});
    ge("read", {"n", "T", "F"});
    ge("read", {"K", "M"});
    ge("read", {"J", "F", "F"});
    ge("read", {"F", "F", "J", "A", "A", "Q"});
    ge("read", {"J", "J", "Q"});
    ge("read", {"F", "F", "M", "K", "J", "Q"});
    ge("read", {"A", "A", "O"});
    lt("read", {"F", "F", "M", "n", "T", "F", "Q"});

    ge("walk", {"F", "F", "J"});
    ge("walk", {"F", "O", "X"});
    ge("walk", {"J", "Z", "D"});
    lt("walk", {"F", "O", "J", "D"});
    ge("walk", {"Z", "Z", "D"});
    ge("walk", {"Z", "Z", "J", "D"});
    ge("walk", {"F", "O", "X", "J", "D"});
    lt("walk", {"J", "A", "A", "F", "F", "D"});
    ge("walk", {"M", "K", "J", "F", "F", "D"});
    ge("walk", {"J", "A", "J", "F", "F", "D"});
    ge("walk", {"M", "K", "A", "A", "A", "F", "F", "D"});
    ge("walk", {"J", "O", "J", "F", "F", "D"});

    ge("extend", {"V", "V", "D"});
    ge("extend", {"H", "X"});
    ge("extend", {"O", "V", "V", "D"});
    ge("extend", {"V", "O"});
    ge("extend", {"B", "C", "F", "p"});
    ge("extend", {"H", "P"});
    lt("extend", {"X", "p", "J", "X", "D"});
    ge("extend", {"P", "P"});

    ge("reduce", {"A", "U"});
    ge("reduce", {"u", "u"});
    ge("reduce", {"s", "m", "o"});
    ge("reduce", {"s", "s"});
    lt("reduce", {"u", "u", "e", "o", "o"});

    ge("extend-left", {"V", "V", "D"});
    ge("extend-left", {"G", "X"});
    ge("extend-left", {"B", "C", "L", "X"});
    ge("extend-left", {"G", "P"});
    lt("extend-left", {"X", "X", "G", "X", "D"});
    ge("extend-left", {"P", "P"});

    ge("walk-left", {"F", "O", "X"});
    ge("walk-left", {"C", "F", "W"});
    lt("walk-left", {"F", "O", "W", "Q"});
    ge("walk-left", {"Z", "Z", "Q"});
    lt("walk-left", {"C", "F", "X", "G", "D"});
    ge("walk-left", {"G", "Z", "D"});

    ge("extend-right", {"V", "V", "D"});
    ge("extend-right", {"V", "O"});
    ge("extend-right", {"B", "C", "R", "X"});
    ge("extend-right", {"P", "G"});
    lt("extend-right", {"X", "X", "G", "X", "D"});
    ge("extend-right", {"X", "G"});

    ge("walk-right", {"F", "O", "X"});
    ge("walk-right", {"C", "F", "E"});
    lt("walk-right", {"F", "O", "E", "Q"});
    ge("walk-right", {"G", "Z", "D"});
    lt("walk-right", {"C", "F", "X", "G", "D"});
    ge("walk-right", {"Z", "Z", "Q"});

    ge("fill", {"H", "I"});
    ge("fill", {"u", "u"});
    ge("fill", {"Y", "G"});
    ge("fill", {"s", "s"});
    ge("fill", {"b", "b", "a"});
    ge("fill", {"J", "s"});
    ge("fill", {"s", "X", "S", "X"});
    ge("fill", {"s", "G"});
    ge("fill-turn", {"Y", "G"});
    return r;
  }();
  return rows;
}

InequalityReport verify_inequalities(const StrengthTable& s, int tau) {
  InequalityReport rep;
  bool ok = true;
  for (const auto& row : inequality_rows()) {
    InequalityResult res{row, 0, false};
    bool resolved = true;
    for (const auto& label : row.lhs) {
      if (!s.resolves(label)) {
        rep.unresolved.push_back(label);
        resolved = false;
        continue;
      }
      res.value += s.lookup(label);
    }
    res.holds = resolved &&
                (row.relation == Relation::AtLeastTau ? res.value >= tau : res.value < tau);
    ok = ok && res.holds;
    rep.rows.push_back(std::move(res));
  }
  for (const auto& [base, v] : s.entries()) {
    if (v >= tau) rep.strong_glues.emplace_back(base, v);
  }
  rep.pass = ok && rep.strong_glues.empty() && rep.unresolved.empty();
  return rep;
}

}  // namespace negglue
