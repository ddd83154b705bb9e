#include "negglue/reaction.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "cut_graph.hpp"
#include "negglue/errors.hpp"

namespace negglue {

namespace detail {

int StrengthCache::operator()(GlueId g) {
  if (g == kNoGlue) return 0;
  auto it = cache_.find(g);
  if (it != cache_.end()) return it->second;
  int v = table_.lookup(g);
  cache_.emplace(g, v);
  return v;
}

int StrengthCache::facing(const Tile& a, const Tile& b, Side side) {
  GlueId g = a.glue(side);
  if (g == kNoGlue || g != b.glue(opposite(side))) return 0;
  return (*this)(g);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ContractedGraph contract(const PositionedAssembly& a, const StrengthTable& s) {
  StrengthCache str(s);
  std::vector<Vec2> pos;
  std::unordered_map<Vec2, int, Vec2Hash> index;
  pos.reserve(a.size());
  for (const auto& [p, _] : a.tiles()) {
    index.emplace(p, static_cast<int>(pos.size()));
    pos.push_back(p);
  }
  struct Raw {
    int u, v, w;
  };
  std::vector<Raw> raw;
  UnionFind uf(pos.size());
  for (const auto& [p, t] : a.tiles()) {
    for (Side side : {Side::East, Side::South}) {
      const Tile* n = a.at(p + step(side));
      if (!n) continue;
      int w = str.facing(t, *n, side);
      int u = index[p], v = index[p + step(side)];
      if (w >= kInfiniteStrength)
        uf.unite(u, v);
      else
        raw.push_back({u, v, w});
    }
  }
  ContractedGraph g;
  std::vector<int> vertex_of(pos.size(), -1);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (vertex_of[r] < 0) {
      vertex_of[r] = static_cast<int>(g.members.size());
      g.members.emplace_back();
    }
    vertex_of[i] = vertex_of[r];
    g.members[vertex_of[i]].push_back(pos[i]);
  }
  std::map<std::pair<int, int>, int> edge_index;
  for (const Raw& r : raw) {
    int u = vertex_of[r.u], v = vertex_of[r.v];
    if (u == v) {
      // A finite bond inside an infinitely bonded body never separates.
      continue;
    }
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edge_index.try_emplace({u, v}, static_cast<int>(g.edges.size()));
    if (inserted) g.edges.push_back({u, v, 0, 0, false});
    auto& e = g.edges[it->second];
    e.weight += r.w;
    e.adjacency += 1;
    if (r.w > 0) e.positive = true;
    if (r.w < 0) g.has_negative = true;
  }
  g.incident.assign(g.members.size(), {});
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    g.incident[g.edges[i].u].push_back(static_cast<int>(i));
    g.incident[g.edges[i].v].push_back(static_cast<int>(i));
  }
  return g;
}

}  // namespace detail

using detail::ContractedGraph;

const SupplyItem* SystemConfig::find_supply(const std::string& name) const {
  for (const auto& item : supply)
    if (item.name == name) return &item;
  return nullptr;
}

bool SystemConfig::glues_resolve(std::string* first_unresolved) const {
  auto check = [&](const Tile& t) {
    for (GlueId g : t.glues) {
      if (g == kNoGlue) continue;
      if (!strengths.resolves(glue_name(g))) {
        if (first_unresolved) *first_unresolved = glue_name(g);
        return false;
      }
    }
    return true;
  };
  for (const auto& t : tiles)
    if (!check(t)) return false;
  for (const auto& item : supply)
    for (const auto& [_, t] : item.body.tiles())
      if (!check(t)) return false;
  return true;
}

std::size_t exact_limit_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("NEGGLUE_EXACT_LIMIT")) {
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end != v && n > 0) return static_cast<std::size_t>(n);
  }
  return fallback;
}

namespace {

using Mask = std::uint64_t;

Cut make_cut(const ContractedGraph& g, const std::vector<char>& in_a, int strength, int crossing) {
  Cut c;
  c.strength = strength;
  c.crossing_edges = crossing;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto& side = in_a[v] ? c.side_a : c.side_b;
    side.insert(side.end(), g.members[v].begin(), g.members[v].end());
  }
  std::sort(c.side_a.begin(), c.side_a.end());
  std::sort(c.side_b.begin(), c.side_b.end());
  if (!c.side_b.empty() && c.side_b.front() < c.side_a.front()) std::swap(c.side_a, c.side_b);
  return c;
}

bool mask_connected(Mask set, const std::vector<Mask>& pos_adj) {
  if (set == 0) return false;
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= pos_adj[std::countr_zero(f)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

// Positive connectivity of an arbitrary vertex subset given as a flag vector.
bool flags_connected(const ContractedGraph& g, const std::vector<char>& member, char want) {
  int start = -1;
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (member[v] == want) {
      ++count;
      if (start < 0) start = static_cast<int>(v);
    }
  if (start < 0) return false;
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.incident[v]) {
      if (!g.edges[e].positive) continue;
      int w = g.other(e, v);
      if (member[w] == want && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == count;
}

CutSet exact_cuts(const ContractedGraph& g) {
  CutSet out;
  out.kind = VerdictKind::Exact;
  const std::size_t n = g.size();
  if (n < 2) return out;
  std::vector<Mask> pos_adj(n, 0);
  for (const auto& e : g.edges)
    if (e.positive) {
      pos_adj[e.u] |= Mask{1} << e.v;
      pos_adj[e.v] |= Mask{1} << e.u;
    }
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);

  auto report = [&](Mask s) {
    Mask rest = all & ~s;
    if (rest == 0 || !mask_connected(rest, pos_adj)) return;
    int strength = 0, crossing = 0;
    for (const auto& e : g.edges) {
      bool a = (s >> e.u) & 1, b = (s >> e.v) & 1;
      if (a != b) {
        strength += e.weight;
        crossing += e.adjacency;
      }
    }
    std::vector<char> in_a(n);
    for (std::size_t v = 0; v < n; ++v) in_a[v] = (s >> v) & 1;
    out.cuts.push_back(make_cut(g, in_a, strength, crossing));
  };

  // Rooted enumeration of positively connected sets containing vertex 0.
  std::function<void(Mask, Mask, Mask)> extend = [&](Mask s, Mask ext, Mask excl) {
    report(s);
    while (ext) {
      Mask vbit = ext & (~ext + 1);
      ext ^= vbit;
      int v = std::countr_zero(vbit);
      Mask ns = s | vbit;
      Mask next = (ext | (pos_adj[v] & ~ns & ~excl)) & ~excl;
      extend(ns, next, excl);
      excl |= vbit;
    }
  };
  extend(Mask{1}, pos_adj[0], Mask{1});
  return out;
}

CutSet bounded_cuts(const ContractedGraph& g, int max_edges, std::size_t budget) {
  CutSet out;
  out.kind = VerdictKind::Bounded;
  const std::size_t n = g.size();
  if (n < 2) return out;
  // 0 undecided, 1 in S, 2 outside.
  std::vector<char> state(n, 0);
  std::vector<int> touch(n, 0);  // incident adjacency count to S
  std::set<int> frontier;        // undecided vertices adjacent to S
  std::size_t nodes = 0;

  auto add_to_s = [&](int v, int& crossing) {
    state[v] = 1;
    frontier.erase(v);
    for (int e : g.incident[v]) {
      int w = g.other(e, v);
      if (state[w] == 2) crossing += g.edges[e].adjacency;
      if (state[w] == 0) {
        touch[w] += g.edges[e].adjacency;
        frontier.insert(w);
      }
    }
  };
  auto remove_from_s = [&](int v) {
    for (int e : g.incident[v]) {
      int w = g.other(e, v);
      if (state[w] == 0) {
        touch[w] -= g.edges[e].adjacency;
        if (touch[w] == 0) frontier.erase(w);
      }
    }
    state[v] = 0;
    frontier.insert(v);
  };

  std::function<void(int)> search = [&](int crossing) {
    if (out.truncated) return;
    if (++nodes > budget) {
      out.truncated = true;
      return;
    }
    if (frontier.empty()) {
      std::vector<char> in_a(n);
      for (std::size_t v = 0; v < n; ++v) in_a[v] = state[v] == 1;
      bool rest_nonempty = std::any_of(state.begin(), state.end(), [](char c) { return c != 1; });
      if (!rest_nonempty) return;
      if (!flags_connected(g, in_a, 1) || !flags_connected(g, in_a, 0)) return;
      int strength = 0;
      for (const auto& e : g.edges)
        if (in_a[e.u] != in_a[e.v]) strength += e.weight;
      out.cuts.push_back(make_cut(g, in_a, strength, crossing));
      return;
    }
    int v = *frontier.begin();
    // Branch 1: v joins S.
    {
      int c = crossing;
      add_to_s(v, c);
      if (c <= max_edges) search(c);
      remove_from_s(v);
    }
    // Branch 2: v is outside; every S-edge to v crosses.
    int c = crossing + touch[v];
    if (c <= max_edges) {
      state[v] = 2;
      frontier.erase(v);
      search(c);
      state[v] = 0;
      frontier.insert(v);
    }
  };
  int c0 = 0;
  add_to_s(0, c0);
  search(c0);
  return out;
}

// Stoer-Wagner global minimum cut for non-negative weights.
std::pair<long long, std::vector<int>> stoer_wagner(const ContractedGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::unordered_map<int, long long>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u][e.v] += e.weight;
    adj[e.v][e.u] += e.weight;
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[i] = {i};
  std::vector<char> alive(n, 1);
  long long best = std::numeric_limits<long long>::max();
  std::vector<int> best_side;
  for (int phase = n; phase > 1; --phase) {
    std::vector<long long> key(n, 0);
    std::vector<char> added(n, 0);
    std::priority_queue<std::pair<long long, int>> pq;
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (alive[i]) {
        start = i;
        break;
      }
    pq.push({0, start});
    int prev = -1, last = -1;
    for (int k = 0; k < phase; ++k) {
      int v = -1;
      while (!pq.empty()) {
        auto [w, u] = pq.top();
        pq.pop();
        if (!added[u] && w == key[u]) {
          v = u;
          break;
        }
      }
      if (v < 0) {
        // Disconnected remainder: pick any unadded alive vertex.
        for (int i = 0; i < n; ++i)
          if (alive[i] && !added[i]) {
            v = i;
            break;
          }
      }
      added[v] = 1;
      prev = last;
      last = v;
      for (auto [w, wt] : adj[v])
        if (alive[w] && !added[w]) {
          key[w] += wt;
          pq.push({key[w], w});
        }
    }
    if (key[last] < best) {
      best = key[last];
      best_side = groups[last];
    }
    // Merge last into prev.
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    for (auto [w, wt] : adj[last]) {
      if (w == prev) continue;
      adj[prev][w] += wt;
      adj[w][prev] += wt;
      adj[w].erase(last);
    }
    adj[prev].erase(last);
    alive[last] = 0;
  }
  return {best, best_side};
}

}  // namespace

CutSet enumerate_cuts_exact(const PositionedAssembly& a, const SystemConfig& cfg) {
  auto g = detail::contract(a, cfg.strengths);
  if (g.size() > cfg.exact_limit || g.size() > 64) throw TooLargeForExact(g.size(), cfg.exact_limit);
  return exact_cuts(g);
}

CutSet enumerate_cuts_bounded(const PositionedAssembly& a, const SystemConfig& cfg, int max_cut_edges) {
  auto g = detail::contract(a, cfg.strengths);
  return bounded_cuts(g, max_cut_edges, cfg.bounded_node_budget);
}

CutSet enumerate_cuts(const Assembly& a, const SystemConfig& cfg) {
  auto g = detail::contract(a.canonical(), cfg.strengths);
  if (g.size() <= cfg.exact_limit && g.size() <= 64) return exact_cuts(g);
  return bounded_cuts(g, cfg.max_cut_edges, cfg.bounded_node_budget);
}

StabilityVerdict is_tau_stable(const PositionedAssembly& a, const SystemConfig& cfg) {
  StabilityVerdict v;
  auto g = detail::contract(a, cfg.strengths);
  if (g.size() < 2) {
    // A single (possibly contracted) vertex has no cut: vacuously stable.
    v.stable = true;
    v.kind = VerdictKind::Exact;
    return v;
  }
  auto pick = [&](const CutSet& cs) {
    v.kind = cs.kind;
    v.truncated = cs.truncated;
    std::optional<int> best;
    for (const auto& c : cs.cuts) {
      if (!best || c.strength < *best) {
        best = c.strength;
        v.witness = c;
      }
    }
    if (cs.kind == VerdictKind::Exact) v.min_cut = best;
    v.stable = !best || *best >= cfg.tau;
    if (v.stable) v.witness.reset();
  };
  if (g.size() <= cfg.exact_limit && g.size() <= 64) {
    pick(exact_cuts(g));
    return v;
  }
  if (!g.has_negative) {
    auto [value, side] = stoer_wagner(g);
    v.kind = VerdictKind::Exact;
    v.min_cut = static_cast<int>(std::min<long long>(value, std::numeric_limits<int>::max()));
    v.stable = value >= cfg.tau;
    if (!v.stable) {
      std::vector<char> in_a(g.size(), 0);
      for (int s : side) in_a[s] = 1;
      int crossing = 0;
      for (const auto& e : g.edges)
        if (in_a[e.u] != in_a[e.v]) crossing += e.adjacency;
      v.witness = make_cut(g, in_a, static_cast<int>(value), crossing);
    }
    return v;
  }
  pick(bounded_cuts(g, cfg.max_cut_edges, cfg.bounded_node_budget));
  return v;
}

StabilityVerdict is_tau_stable(const Assembly& a, const SystemConfig& cfg) {
  return is_tau_stable(a.canonical(), cfg);
}

namespace {

PositionedAssembly subset(const PositionedAssembly& a, const std::vector<Vec2>& cells) {
  PositionedAssembly out;
  for (Vec2 p : cells) out.place(p, *a.at(p));
  return out;
}

}  // namespace

std::vector<PiecePair> find_breaks(const Assembly& a, const SystemConfig& cfg) {
  std::vector<PiecePair> out;
  CutSet cs = enumerate_cuts(a, cfg);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& c : cs.cuts) {
    if (c.strength >= cfg.tau) continue;
    Assembly pa = canonicalize(subset(a.canonical(), c.side_a));
    Assembly pb = canonicalize(subset(a.canonical(), c.side_b));
    if (pb < pa) std::swap(pa, pb);
    bool dup = std::any_of(out.begin(), out.end(), [&](const PiecePair& p) { return p.first == pa && p.second == pb; });
    if (!dup) out.emplace_back(std::move(pa), std::move(pb));
  }
  std::sort(out.begin(), out.end(), [](const PiecePair& x, const PiecePair& y) {
    if (!(x.first == y.first)) return x.first < y.first;
    return x.second < y.second;
  });
  return out;
}

std::optional<int> boundary_strength(const PositionedAssembly& host, const PositionedAssembly& piece,
                                     const StrengthTable& s) {
  detail::StrengthCache str(s);
  int total = 0;
  for (const auto& [p, t] : piece.tiles()) {
    if (host.contains(p)) return std::nullopt;
    for (Side side : kSides) {
      const Tile* n = host.at(p + step(side));
      if (n) total += str.facing(t, *n, side);
    }
  }
  return total;
}

int cut_strength(const PositionedAssembly& a, const std::set<Vec2>& piece, const StrengthTable& s) {
  detail::StrengthCache str(s);
  int total = 0;
  for (Vec2 p : piece) {
    const Tile* t = a.at(p);
    if (!t) continue;
    for (Side side : kSides) {
      Vec2 q = p + step(side);
      if (piece.count(q)) continue;
      const Tile* n = a.at(q);
      if (n) total += str.facing(*t, *n, side);
    }
  }
  return total;
}

bool positively_connected(const PositionedAssembly& a, const std::set<Vec2>& cells, const StrengthTable& s) {
  if (cells.empty()) return false;
  detail::StrengthCache str(s);
  std::set<Vec2> seen{*cells.begin()};
  std::vector<Vec2> stack{*cells.begin()};
  while (!stack.empty()) {
    Vec2 p = stack.back();
    stack.pop_back();
    const Tile* t = a.at(p);
    for (Side side : kSides) {
      Vec2 q = p + step(side);
      if (!cells.count(q) || seen.count(q)) continue;
      const Tile* n = a.at(q);
      if (n && str.facing(*t, *n, side) > 0) {
        seen.insert(q);
        stack.push_back(q);
      }
    }
  }
  return seen.size() == cells.size();
}

bool positively_connected(const PositionedAssembly& a, const StrengthTable& s) {
  std::set<Vec2> cells;
  for (const auto& [p, _] : a.tiles()) cells.insert(p);
  return positively_connected(a, cells, s);
}

std::vector<Combination> combinations(const Assembly& a, const Assembly& b, const SystemConfig& cfg) {
  const auto& host = a.canonical();
  const auto& piece = b.canonical();
  detail::StrengthCache str(cfg.strengths);
  // Index host glues by (glue, side) so candidate translations come only from
  // facing glue pairs that can bond positively.
  std::unordered_map<std::uint64_t, std::vector<Vec2>> index;
  auto key = [](GlueId g, Side s) { return (static_cast<std::uint64_t>(g) << 2) | static_cast<int>(s); };
  for (const auto& [p, t] : host.tiles())
    for (Side s : kSides) {
      GlueId g = t.glue(s);
      if (g != kNoGlue && str(g) > 0 && !host.contains(p + step(s))) index[key(g, s)].push_back(p);
    }
  std::set<Vec2> candidates;
  for (const auto& [q, t] : piece.tiles())
    for (Side s : kSides) {
      GlueId g = t.glue(s);
      if (g == kNoGlue) continue;
      auto it = index.find(key(g, opposite(s)));
      if (it == index.end()) continue;
      for (Vec2 p : it->second) candidates.insert(p + step(opposite(s)) - q);
    }
  std::vector<Combination> out;
  for (Vec2 v : candidates) {
    auto placed = piece.translated(v);
    auto strength = boundary_strength(host, placed, cfg.strengths);
    if (!strength || *strength < cfg.tau) continue;
    PositionedAssembly merged = host;
    for (const auto& [p, t] : placed.tiles()) merged.place(p, t);
    Assembly result = canonicalize(merged);
    bool dup = std::any_of(out.begin(), out.end(), [&](const Combination& c) { return c.result == result; });
    if (!dup) out.push_back({std::move(result), *strength, v});
  }
  return out;
}

ReactionGraph explore(const SystemConfig& cfg, std::size_t max_assemblies, std::size_t max_size) {
  ReactionGraph rg;
  std::unordered_map<Assembly, std::size_t, AssemblyHash> index;
  std::deque<std::size_t> queue;

  auto add = [&](const Assembly& x) -> std::optional<std::size_t> {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    if (x.size() > max_size || rg.assemblies.size() >= max_assemblies) {
      rg.saturated = false;
      return std::nullopt;
    }
    std::size_t id = rg.assemblies.size();
    rg.assemblies.push_back(x);
    rg.forward.emplace_back();
    index.emplace(x, id);
    queue.push_back(id);
    return id;
  };
  auto link = [&](std::size_t from, std::size_t to) {
    auto& f = rg.forward[from];
    if (std::find(f.begin(), f.end(), to) == f.end()) f.push_back(to);
  };

  std::vector<Assembly> initial;
  for (const auto& t : cfg.tiles) {
    PositionedAssembly p;
    p.place({0, 0}, t);
    initial.push_back(canonicalize(p));
  }
  for (const auto& s : cfg.supply) initial.push_back(canonicalize(s.body));
  for (const auto& x : initial) add(x);

  std::size_t processed = 0;
  while (processed < rg.assemblies.size()) {
    std::size_t id = processed++;
    Assembly x = rg.assemblies[id];
    auto cuts = enumerate_cuts(x, cfg);
    if (cuts.kind != VerdictKind::Exact) rg.exact = false;
    for (const auto& [pa, pb] : find_breaks(x, cfg)) {
      if (auto a = add(pa)) link(id, *a);
      if (auto b = add(pb)) link(id, *b);
    }
    // Combine with everything discovered so far (including itself).
    for (std::size_t other = 0; other <= id && other < rg.assemblies.size(); ++other) {
      Assembly y = rg.assemblies[other];
      auto combos = combinations(x, y, cfg);
      std::sort(combos.begin(), combos.end(), [](const Combination& l, const Combination& r) { return l.result < r.result; });
      for (const auto& c : combos) {
        if (auto r = add(c.result)) {
          link(id, *r);
          link(other, *r);
        }
      }
    }
  }
  return rg;
}

ProducibleSet producible_set(const SystemConfig& cfg, std::size_t max_assemblies, std::size_t max_size) {
  auto rg = explore(cfg, max_assemblies, max_size);
  return {std::move(rg.assemblies), rg.saturated};
}

bool is_terminal(const Assembly& a, const SystemConfig& cfg, const std::vector<Assembly>& witnesses) {
  if (!is_tau_stable(a, cfg).stable) return false;
  for (const auto& w : witnesses)
    if (!combinations(a, w, cfg).empty()) return false;
  return true;
}

UniqueShapeReport check_unique_shape(const SystemConfig& cfg, const Shape& target, std::size_t c,
                                     std::size_t max_assemblies, std::size_t max_size) {
  auto rg = explore(cfg, max_assemblies, max_size);
  if (!rg.saturated) throw InconclusiveVerdict("producible set did not saturate within bounds");
  UniqueShapeReport rep;
  rep.producible = rg.assemblies.size();
  const std::size_t n = rg.assemblies.size();
  std::vector<char> good(n, 0);
  std::vector<std::vector<std::size_t>> backward(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : rg.forward[i]) backward[j].push_back(i);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = rg.assemblies[i];
    if (shape_of(x) == target && is_terminal(x, cfg, rg.assemblies)) {
      good[i] = 1;
      ++rep.terminal_with_target_shape;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    std::size_t j = queue.front();
    queue.pop_front();
    for (std::size_t i : backward[j])
      if (!good[i]) {
        good[i] = 1;
        queue.push_back(i);
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!good[i] && rg.assemblies[i].size() > c) rep.violations.push_back(rg.assemblies[i]);
  rep.pass = rep.violations.empty() && rep.terminal_with_target_shape > 0;
  return rep;
}

}  // namespace negglue
