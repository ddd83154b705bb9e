#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "negglue/assembly.hpp"
#include "negglue/glue.hpp"

namespace negglue {

/// A pre-built assembly available in unbounded supply, kept in the frame it
/// was authored in so scripted placements can refer to its coordinates.
struct SupplyItem {
  std::string name;
  PositionedAssembly body;
};

struct SystemConfig {
  int tau = 10;
  StrengthTable strengths;
  std::vector<Tile> tiles;
  std::vector<SupplyItem> supply;
  /// Exact cut enumeration is used up to this many vertices of the
  /// contracted bond graph (infinite bonds merged).
  std::size_t exact_limit = 14;
  int max_cut_edges = 10;
  /// Search-node budget for bounded enumeration before giving up.
  std::size_t bounded_node_budget = 2'000'000;

  const SupplyItem* find_supply(const std::string& name) const;
  /// Every glue on every tile and supplied assembly resolves in strengths.
  bool glues_resolve(std::string* first_unresolved = nullptr) const;
};

/// Reads NEGGLUE_EXACT_LIMIT when set, otherwise returns fallback.
std::size_t exact_limit_from_env(std::size_t fallback);

struct Cut {
  std::vector<Vec2> side_a;  // contains the row-major minimal tile
  std::vector<Vec2> side_b;
  int strength = 0;
  int crossing_edges = 0;
};

enum class VerdictKind { Exact, Bounded };

struct CutSet {
  std::vector<Cut> cuts;
  VerdictKind kind = VerdictKind::Exact;
  bool truncated = false;  // bounded search hit its node budget
};

/// All connected 2-partitions. Throws TooLargeForExact above cfg.exact_limit.
CutSet enumerate_cuts_exact(const PositionedAssembly& a, const SystemConfig& cfg);
/// All connected 2-partitions crossing at most max_cut_edges adjacency edges.
CutSet enumerate_cuts_bounded(const PositionedAssembly& a, const SystemConfig& cfg, int max_cut_edges);
/// Exact when small enough, bounded otherwise.
CutSet enumerate_cuts(const Assembly& a, const SystemConfig& cfg);

struct StabilityVerdict {
  bool stable = true;
  VerdictKind kind = VerdictKind::Exact;
  bool truncated = false;
  std::optional<int> min_cut;  // known when the search is exact
  std::optional<Cut> witness;
};

StabilityVerdict is_tau_stable(const PositionedAssembly& a, const SystemConfig& cfg);
StabilityVerdict is_tau_stable(const Assembly& a, const SystemConfig& cfg);

using PiecePair = std::pair<Assembly, Assembly>;
std::vector<PiecePair> find_breaks(const Assembly& a, const SystemConfig& cfg);

struct Combination {
  Assembly result;
  int strength = 0;
  Vec2 offset;  // translation applied to b's canonical frame, relative to a's
};

/// Every non-overlapping placement of b against a whose facing-glue sum is at
/// least tau. Results are canonical and may be unstable.
std::vector<Combination> combinations(const Assembly& a, const Assembly& b, const SystemConfig& cfg);

/// Sum of facing-glue strengths between `piece` placed as-is and `host`.
/// Returns nullopt when they overlap.
std::optional<int> boundary_strength(const PositionedAssembly& host, const PositionedAssembly& piece,
                                     const StrengthTable& s);

/// Strength of the cut separating `piece` (a subset of a's coordinates).
int cut_strength(const PositionedAssembly& a, const std::set<Vec2>& piece, const StrengthTable& s);

/// True when the given cells of `a` form one component under positive bonds.
bool positively_connected(const PositionedAssembly& a, const std::set<Vec2>& cells, const StrengthTable& s);
bool positively_connected(const PositionedAssembly& a, const StrengthTable& s);

/// Bounded closure of tiles and supply under combination and breaking.
struct ReactionGraph {
  std::vector<Assembly> assemblies;                // discovery order
  std::vector<std::vector<std::size_t>> forward;   // A ->_1 B edges (by index)
  bool saturated = true;
  bool exact = true;  // every stability query used exact enumeration
};

ReactionGraph explore(const SystemConfig& cfg, std::size_t max_assemblies, std::size_t max_size);

struct ProducibleSet {
  std::vector<Assembly> assemblies;
  bool saturated = true;
};

ProducibleSet producible_set(const SystemConfig& cfg, std::size_t max_assemblies, std::size_t max_size);

bool is_terminal(const Assembly& a, const SystemConfig& cfg, const std::vector<Assembly>& witnesses);

struct UniqueShapeReport {
  bool pass = false;
  std::size_t producible = 0;
  std::size_t terminal_with_target_shape = 0;
  std::vector<Assembly> violations;  // size > c with no path to a target-shaped terminal
};

/// Throws InconclusiveVerdict when exploration does not saturate.
UniqueShapeReport check_unique_shape(const SystemConfig& cfg, const Shape& target, std::size_t c,
                                     std::size_t max_assemblies, std::size_t max_size);

}  // namespace negglue
