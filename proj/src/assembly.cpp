#include "negglue/assembly.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "negglue/errors.hpp"

namespace negglue {

namespace {

struct TypePool {
  std::mutex mu;
  std::map<std::array<GlueId, 4>, TileTypeId> ids;
};

TypePool& type_pool() {
  static TypePool p;
  return p;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

TileTypeId Tile::type_id() const {
  auto& p = type_pool();
  std::lock_guard lock(p.mu);
  auto [it, _] = p.ids.try_emplace(glues, static_cast<TileTypeId>(p.ids.size()));
  return it->second;
}

Tile Tile::rotated_cw(int quarter_turns) const {
  Tile t;
  for (Side s : kSides) t.glues[static_cast<int>(rotate_cw(s, quarter_turns))] = glue(s);
  return t;
}

Tile make_tile(std::string_view n, std::string_view e, std::string_view s, std::string_view w) {
  return Tile{{intern_glue(n), intern_glue(e), intern_glue(s), intern_glue(w)}};
}

const Tile* PositionedAssembly::at(Vec2 p) const {
  auto it = tiles_.find(p);
  return it == tiles_.end() ? nullptr : &it->second;
}

bool PositionedAssembly::place(Vec2 p, const Tile& t) { return tiles_.emplace(p, t).second; }

PositionedAssembly PositionedAssembly::translated(Vec2 v) const {
  Map out;
  for (const auto& [p, t] : tiles_) out.emplace_hint(out.end(), p + v, t);
  return PositionedAssembly(std::move(out));
}

PositionedAssembly PositionedAssembly::rotated_cw(int quarter_turns) const {
  Map out;
  for (const auto& [p, t] : tiles_) out.emplace(rotate_cw(p, quarter_turns), t.rotated_cw(quarter_turns));
  return PositionedAssembly(std::move(out));
}

Vec2 PositionedAssembly::min_coord() const {
  if (tiles_.empty()) throw EmptyAssembly();
  return tiles_.begin()->first;
}

Assembly canonicalize(const PositionedAssembly& a) {
  if (a.empty()) throw EmptyAssembly();
  Vec2 origin = a.min_coord();
  Assembly out;
  out.canonical_ = a.translated(Vec2{0, 0} - origin);
  std::size_t h = out.canonical_.size();
  for (const auto& [p, t] : out.canonical_.tiles()) {
    h = mix(h, Vec2Hash{}(p));
    for (GlueId g : t.glues) h = mix(h, g);
  }
  out.hash_ = h;
  return out;
}

bool operator<(const Assembly& a, const Assembly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& ta = a.canonical().tiles();
  const auto& tb = b.canonical().tiles();
  return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

Shape::Shape(const std::set<Vec2>& cells) {
  if (cells.empty()) return;
  Vec2 origin = *cells.begin();
  for (Vec2 c : cells) cells_.insert(c - origin);
}

bool Shape::is_connected() const {
  if (cells_.empty()) return false;
  std::set<Vec2> seen{*cells_.begin()};
  std::deque<Vec2> queue{*cells_.begin()};
  while (!queue.empty()) {
    Vec2 p = queue.front();
    queue.pop_front();
    for (Side s : kSides) {
      Vec2 q = p + step(s);
      if (cells_.count(q) && seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen.size() == cells_.size();
}

Shape shape_of(const PositionedAssembly& a) {
  if (a.empty()) throw EmptyAssembly();
  std::set<Vec2> cells;
  for (const auto& [p, _] : a.tiles()) cells.insert(p);
  return Shape(cells);
}

Shape shape_of(const Assembly& a) { return shape_of(a.canonical()); }

Shape scale(const Shape& sh, int c) {
  if (c < 1) throw InvalidScale();
  std::set<Vec2> out;
  for (Vec2 p : sh.cells())
    for (int dy = 0; dy < c; ++dy)
      for (int dx = 0; dx < c; ++dx) out.insert({p.x * c + dx, p.y * c + dy});
  return Shape(out);
}

int facing_strength(const Tile& a, const Tile& b, Side side, const StrengthTable& s) {
  GlueId g = a.glue(side);
  if (g == kNoGlue || g != b.glue(opposite(side))) return 0;
  return s.lookup(g);
}

int BondGraph::weight(Vec2 p, Vec2 q) const {
  for (const auto& e : edges) {
    Vec2 a = vertices[e.u], b = vertices[e.v];
    if ((a == p && b == q) || (a == q && b == p)) return e.weight;
  }
  return 0;
}

BondGraph bond_graph(const PositionedAssembly& a, const StrengthTable& s) {
  BondGraph g;
  std::map<Vec2, std::size_t> index;
  for (const auto& [p, _] : a.tiles()) {
    index.emplace(p, g.vertices.size());
    g.vertices.push_back(p);
  }
  for (const auto& [p, t] : a.tiles()) {
    for (Side side : {Side::East, Side::South}) {
      const Tile* n = a.at(p + step(side));
      if (!n) continue;
      g.edges.push_back({index[p], index[p + step(side)], facing_strength(t, *n, side, s)});
    }
  }
  return g;
}

BondGraph bond_graph(const Assembly& a, const StrengthTable& s) { return bond_graph(a.canonical(), s); }

}  // namespace negglue
