#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "negglue/geometry.hpp"
#include "negglue/glue.hpp"

namespace negglue {

using TileTypeId = std::uint32_t;

/// A unit square tile. The type id is derived from the glue tuple, so two
/// tiles that agree up to translation always share a type.
struct Tile {
  std::array<GlueId, 4> glues{};  // indexed by Side

  GlueId glue(Side s) const { return glues[static_cast<int>(s)]; }
  TileTypeId type_id() const;
  Tile rotated_cw(int quarter_turns) const;

  friend bool operator==(const Tile&, const Tile&) = default;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

Tile make_tile(std::string_view n, std::string_view e, std::string_view s, std::string_view w);

/// Tiles at unique integer coordinates.
class PositionedAssembly {
 public:
  using Map = std::map<Vec2, Tile>;

  PositionedAssembly() = default;
  explicit PositionedAssembly(Map tiles) : tiles_(std::move(tiles)) {}

  bool empty() const { return tiles_.empty(); }
  std::size_t size() const { return tiles_.size(); }
  const Map& tiles() const { return tiles_; }
  bool contains(Vec2 p) const { return tiles_.count(p) != 0; }
  const Tile* at(Vec2 p) const;

  /// Returns false (and leaves the assembly unchanged) if p is occupied.
  bool place(Vec2 p, const Tile& t);
  void erase(Vec2 p) { tiles_.erase(p); }
  PositionedAssembly translated(Vec2 v) const;
  PositionedAssembly rotated_cw(int quarter_turns) const;
  /// Row-major minimal occupied coordinate.
  Vec2 min_coord() const;

  friend bool operator==(const PositionedAssembly&, const PositionedAssembly&) = default;

 private:
  Map tiles_;
};

/// Translation-free assembly: a positioned assembly normalized so that its
/// row-major minimal coordinate is the origin.
class Assembly {
 public:
  Assembly() = default;

  const PositionedAssembly& canonical() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }
  std::size_t hash() const { return hash_; }

  friend bool operator==(const Assembly& a, const Assembly& b) {
    return a.hash_ == b.hash_ && a.canonical_ == b.canonical_;
  }
  friend bool operator<(const Assembly& a, const Assembly& b);

 private:
  friend Assembly canonicalize(const PositionedAssembly& a);
  PositionedAssembly canonical_;
  std::size_t hash_ = 0;
};

struct AssemblyHash {
  std::size_t operator()(const Assembly& a) const noexcept { return a.hash(); }
};

/// Throws EmptyAssembly on empty input.
Assembly canonicalize(const PositionedAssembly& a);

/// Canonical set of cells (same translation rule as Assembly).
class Shape {
 public:
  Shape() = default;
  explicit Shape(const std::set<Vec2>& cells);

  const std::set<Vec2>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool is_connected() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::set<Vec2> cells_;
};

Shape shape_of(const Assembly& a);
Shape shape_of(const PositionedAssembly& a);
/// Each cell becomes a c x c block. Throws InvalidScale for c == 0.
Shape scale(const Shape& sh, int c);

class StrengthTable;

/// Weighted grid graph over an assembly: one edge per adjacent tile pair,
/// weight = strength of the facing glue when both names agree, else 0.
struct BondGraph {
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    int weight = 0;
  };
  std::vector<Vec2> vertices;
  std::vector<Edge> edges;

  /// Weight between two adjacent coordinates; 0 when absent.
  int weight(Vec2 p, Vec2 q) const;
};

BondGraph bond_graph(const PositionedAssembly& a, const StrengthTable& s);
BondGraph bond_graph(const Assembly& a, const StrengthTable& s);

/// Strength of the bond between tile a (at p) and tile b at p + step(side).
int facing_strength(const Tile& a, const Tile& b, Side side, const StrengthTable& s);

}  // namespace negglue
