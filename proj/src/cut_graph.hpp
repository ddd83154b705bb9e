#pragma once

// Internal: bond graph with infinite bonds contracted into single vertices.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "negglue/assembly.hpp"
#include "negglue/glue.hpp"

namespace negglue::detail {

struct ContractedGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int weight = 0;    // summed over the tile-level edges between u and v
    int adjacency = 0; // number of tile-level adjacent pairs
    bool positive = false;  // at least one positive tile-level edge
  };

  std::vector<std::vector<Vec2>> members;  // tiles of each vertex, sorted
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;  // edge indices per vertex
  bool has_negative = false;

  std::size_t size() const { return members.size(); }
  int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
};

ContractedGraph contract(const PositionedAssembly& a, const StrengthTable& s);

/// Cached strength lookup keyed by glue id.
class StrengthCache {
 public:
  explicit StrengthCache(const StrengthTable& s) : table_(s) {}
  int operator()(GlueId g);
  int facing(const Tile& a, const Tile& b, Side side);

 private:
  const StrengthTable& table_;
  std::unordered_map<GlueId, int> cache_;
};

}  // namespace negglue::detail
