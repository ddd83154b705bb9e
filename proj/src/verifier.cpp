#include "negglue/verifier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "negglue/errors.hpp"
#include "negglue/strengths.hpp"

namespace negglue {

std::string contact_expression(const PositionedAssembly& host, const PositionedAssembly& piece) {
  std::string out;
  for (const auto& [p, t] : piece.tiles())
    for (Side s : kSides) {
      const Tile* n = host.at(p + step(s));
      if (!n || piece.contains(p + step(s))) continue;
      GlueId g = t.glue(s);
      if (g == kNoGlue || g != n->glue(opposite(s))) continue;
      out += (out.empty() ? "" : "+") + glue_name(g);
    }
  return out;
}

bool AuditReport::pass() const {
  return trace_divergences.empty() && terminal_shape_match && inequality_pass && terminal &&
         max_detached_piece <= c_garbage;
}

std::string AuditReport::text() const {
  std::ostringstream os;
  os << "max_detached_piece " << max_detached_piece << '\n';
  os << "break_count " << break_count << '\n';
  os << "terminal_shape_match " << (terminal_shape_match ? "true" : "false") << '\n';
  os << "inequality_pass " << (inequality_pass ? "true" : "false") << '\n';
  os << "trace_divergences " << trace_divergences.size() << '\n';
  for (const auto& d : trace_divergences) os << "divergence " << d << '\n';
  os << "c_garbage " << c_garbage << '\n';
  os << "combine_count " << combine_count << '\n';
  os << "terminal " << (terminal ? "true" : "false") << '\n';
  os << "final_tiles " << final_assembly.size() << '\n';
  os << "pass " << (pass() ? "true" : "false") << '\n';
  return os.str();
}

namespace {

std::set<Vec2> operator+(std::set<Vec2> a, const std::set<Vec2>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

class Audit {
 public:
  Audit(const CompiledSystem& cs, const AuditOptions& opts) : cs_(cs), opts_(opts), cfg_(cs.config()) {
    r_.c_garbage = cs.policy.c_garbage;
  }

  AuditReport run() {
    r_.inequality_pass = verify_inequalities(cfg_.strengths, cfg_.tau).pass;
    tape_ = cs_.tape.assembly;
    remember(tape_);
    if (run_pipeline()) finish();
    return std::move(r_);
  }

 private:
  bool run_pipeline() {
    const std::size_t n = cs_.seq.moves.size();
    const Vec2 reader_shift{-1, -1};
    auto initiator = placed("overlay.initiator", cs_.tape.unit_origins[0] + reader_shift);
    if (!initiator || !combine("overlay", tape_, *initiator, "tape", false)) return false;
    auto marker = detach("overlay", tape_, unit_cells(0) + cells_of(*initiator), "read-detach of the end marker");
    if (!marker) return false;
    garbage_.push_back(*marker);

    auto first = placed(cs_.block_name(0), cs_.block_origin(0));
    if (!first) return false;
    shape_ = *first;
    remember(shape_);
    observe("start");

    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 origin = cs_.tape.unit_origins[i + 1];
      auto reader = placed(cs_.reader_for(i), origin + reader_shift);
      if (!reader || !combine("read", tape_, *reader, "tape", false)) return false;
      auto messenger = detach("reduce", tape_, unit_cells(i + 1) + cells_of(*reader),
                              "read-detach of section " + std::to_string(i));
      if (!messenger) return false;
      const Vec2 dock = cs_.block_origin(i) + dock_offset(cs_.exits[i]) - origin;
      if (!combine("walk", shape_, messenger->translated(dock), "shape", true)) return false;
      observe("walk");
      auto next = placed(cs_.block_name(i + 1), cs_.block_origin(i + 1));
      if (!next || !combine("extend", shape_, *next, "shape", true)) return false;
      observe("extend");
    }
    garbage_.push_back(tape_);
    return true;
  }

  void finish() {
    r_.final_assembly = shape_;
    r_.terminal_shape_match = shape_of(shape_) == cs_.target;
    if (!opts_.check_terminal) {
      r_.terminal = true;
      return;
    }
    std::vector<Assembly> witnesses;
    for (const auto& s : cfg_.supply) witnesses.push_back(canonicalize(s.body));
    for (const auto& g : garbage_) witnesses.push_back(canonicalize(g));
    r_.terminal = is_terminal(canonicalize(shape_), cfg_, witnesses);
    if (!r_.terminal) diverge("final assembly is not terminal");
  }

  static std::set<Vec2> cells_of(const PositionedAssembly& a) {
    std::set<Vec2> out;
    for (const auto& [p, _] : a.tiles()) out.insert(p);
    return out;
  }

  std::set<Vec2> unit_cells(std::size_t u) const {
    std::set<Vec2> out;
    const Vec2 o = cs_.tape.unit_origins[u];
    for (int y = 0; y < 2; ++y)
      for (int x = 0; x < kUnitWidth; ++x) out.insert(o + Vec2{x, y});
    return out;
  }

  std::optional<PositionedAssembly> placed(const std::string& name, Vec2 at) {
    const Gadget* g = cs_.system.find(name);
    if (!g) {
      diverge("system has no gadget '" + name + "'");
      return std::nullopt;
    }
    last_name_ = name + "@" + std::to_string(at.x) + "," + std::to_string(at.y);
    return g->body.translated(at);
  }

  bool combine(const std::string& phase, PositionedAssembly& host, const PositionedAssembly& piece,
               const std::string& host_name, bool must_stay_stable) {
    ReactionEvent ev;
    ev.kind = TraceStep::Kind::Combine;
    ev.lhs = host_name;
    ev.rhs = phase == "walk" ? "messenger" : last_name_;
    auto s = boundary_strength(host, piece, cfg_.strengths);
    if (!s) {
      diverge(phase + ": " + ev.rhs + " overlaps the " + host_name);
      return false;
    }
    ev.strength = *s;
    ev.expression = contact_expression(host, piece);
    ev.size_before = host.size();
    if (*s < cfg_.tau) {
      diverge(phase + ": " + ev.rhs + " attaches with " + std::to_string(*s) + ", below tau");
      return false;
    }
    for (const auto& [p, t] : piece.tiles()) host.place(p, t);
    ev.size_after = host.size();
    r_.log.push_back({phase, ev});
    ++r_.combine_count;
    if (must_stay_stable) {
      auto v = is_tau_stable(host, cfg_);
      if (!v.stable) {
        diverge(phase + ": " + host_name + " is not tau-stable after " + ev.rhs);
        return false;
      }
    }
    remember(host);
    return true;
  }

  std::optional<PositionedAssembly> detach(const std::string& phase, PositionedAssembly& host,
                                           const std::set<Vec2>& leaving, const std::string& what) {
    std::set<Vec2> staying;
    for (const auto& [p, _] : host.tiles())
      if (!leaving.count(p)) staying.insert(p);
    for (Vec2 p : leaving)
      if (!host.contains(p)) {
        diverge(phase + ": " + what + " is not part of the assembly");
        return std::nullopt;
      }
    if (!positively_connected(host, leaving, cfg_.strengths) ||
        !positively_connected(host, staying, cfg_.strengths)) {
      diverge(phase + ": " + what + " does not split into two connected pieces");
      return std::nullopt;
    }
    PositionedAssembly piece, rest;
    for (Vec2 p : leaving) piece.place(p, *host.at(p));
    for (Vec2 p : staying) rest.place(p, *host.at(p));
    ReactionEvent ev;
    ev.kind = TraceStep::Kind::Break;
    ev.lhs = "tape";
    ev.rhs = what;
    ev.strength = cut_strength(host, leaving, cfg_.strengths);
    ev.expression = contact_expression(rest, piece);
    ev.size_before = host.size();
    ev.size_after = rest.size();
    ev.detached = piece.size();
    if (ev.strength >= cfg_.tau) {
      diverge(phase + ": " + what + " cut strength " + std::to_string(ev.strength) + " is not below tau");
      return std::nullopt;
    }
    r_.log.push_back({phase, ev});
    ++r_.break_count;
    r_.max_detached_piece = std::max(r_.max_detached_piece, piece.size());
    host = std::move(rest);
    remember(host);
    remember(piece);
    return piece;
  }

  void remember(const PositionedAssembly& a) {
    if (!a.empty()) r_.scripted_states.push_back(canonicalize(a));
  }

  void observe(const std::string& phase) {
    if (opts_.on_step) opts_.on_step(step_, phase, shape_);
    ++step_;
  }

  void diverge(const std::string& why) { r_.trace_divergences.push_back(why); }

  const CompiledSystem& cs_;
  const AuditOptions& opts_;
  SystemConfig cfg_;
  AuditReport r_;
  PositionedAssembly tape_, shape_;
  std::vector<PositionedAssembly> garbage_;
  std::string last_name_;
  std::size_t step_ = 0;
};

}  // namespace

AuditReport audit_run(const CompiledSystem& cs, const AuditOptions& opts) { return Audit(cs, opts).run(); }

SystemConfig fig1_config() {
  SystemConfig cfg;
  cfg.tau = 1;
  cfg.strengths.set("X", 2);
  cfg.strengths.set("Y", 1);
  cfg.strengths.set("Z", 2);
  cfg.strengths.set("N", -1);
  PositionedAssembly three;
  three.place({0, 0}, make_tile("-", "X", "Y", "-"));
  three.place({1, 0}, make_tile("-", "-", "Z", "X"));
  three.place({0, 1}, make_tile("Y", "N", "-", "-"));
  PositionedAssembly single;
  single.place({0, 0}, make_tile("Z", "-", "-", "N"));
  cfg.supply.push_back({"fig1.three", three});
  cfg.supply.push_back({"fig1.single", single});
  return cfg;
}

Fig1Demo fig1_demo() {
  Fig1Demo d;
  d.cfg = fig1_config();
  const auto& three = d.cfg.supply[0].body;
  const auto single = d.cfg.supply[1].body.translated({1, 1});
  ReactionEvent attach;
  attach.kind = TraceStep::Kind::Combine;
  attach.lhs = "fig1.three";
  attach.rhs = "fig1.single@1,1";
  attach.strength = boundary_strength(three, single, d.cfg.strengths).value_or(0);
  attach.expression = contact_expression(three, single);
  attach.size_before = three.size();
  d.combined = three;
  for (const auto& [p, t] : single.tiles()) d.combined.place(p, t);
  attach.size_after = d.combined.size();
  d.events.push_back(attach);

  auto cuts = enumerate_cuts_exact(d.combined, d.cfg);
  for (const auto& c : cuts.cuts) {
    if (c.strength >= d.cfg.tau) continue;
    std::set<Vec2> a(c.side_a.begin(), c.side_a.end()), b(c.side_b.begin(), c.side_b.end());
    if (!positively_connected(d.combined, a, d.cfg.strengths) || !positively_connected(d.combined, b, d.cfg.strengths))
      continue;
    const auto& small = a.size() <= b.size() ? a : b;
    PositionedAssembly pa, pb;
    for (Vec2 p : a) pa.place(p, *d.combined.at(p));
    for (Vec2 p : b) pb.place(p, *d.combined.at(p));
    ReactionEvent brk;
    brk.kind = TraceStep::Kind::Break;
    brk.lhs = "$";
    brk.rhs = small.size() == 1 ? "tile@" + std::to_string(small.begin()->x) + "," + std::to_string(small.begin()->y)
                                : "piece";
    brk.strength = c.strength;
    brk.expression = contact_expression(a.size() <= b.size() ? pb : pa, a.size() <= b.size() ? pa : pb);
    brk.size_before = d.combined.size();
    brk.size_after = d.combined.size() - small.size();
    brk.detached = small.size();
    d.events.push_back(brk);
    d.pieces = {pa, pb};
    std::sort(d.pieces.begin(), d.pieces.end(),
              [](const PositionedAssembly& l, const PositionedAssembly& r) { return l.min_coord() < r.min_coord(); });
    break;
  }
  return d;
}

std::string ProbeReport::text() const {
  std::ostringstream os;
  os << "horizon " << horizon << '\n';
  os << "explored " << explored << '\n';
  os << "saturated true\n";
  os << "c_garbage " << c_garbage << '\n';
  os << "frontier_hits " << frontier_hits << '\n';
  os << "violations " << violations.size() << '\n';
  for (const auto& v : violations) os << "violation_size " << v.size() << '\n';
  os << "pass " << (pass ? "true" : "false") << '\n';
  return os.str();
}

ProbeReport adversarial_probe(const SystemConfig& cfg, const std::vector<Assembly>& frontier, const Shape& target,
                              std::size_t c_garbage, std::size_t horizon, std::size_t max_size) {
  auto rg = explore(cfg, horizon, max_size);
  if (!rg.saturated)
    throw InconclusiveVerdict("exploration stopped at " + std::to_string(rg.assemblies.size()) +
                              " assemblies without saturating (horizon " + std::to_string(horizon) + ")");
  ProbeReport rep;
  rep.horizon = horizon;
  rep.explored = rg.assemblies.size();
  rep.c_garbage = c_garbage;
  const std::size_t n = rg.assemblies.size();
  std::unordered_set<Assembly, AssemblyHash> scripted(frontier.begin(), frontier.end());
  std::vector<char> good(n, 0);
  std::vector<std::vector<std::size_t>> backward(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : rg.forward[i]) backward[j].push_back(i);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = rg.assemblies[i];
    bool hit = scripted.count(x) != 0;
    if (!hit && shape_of(x) == target) hit = is_terminal(x, cfg, rg.assemblies);
    if (hit) {
      good[i] = 1;
      ++rep.frontier_hits;
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
    if (!good[i] && rg.assemblies[i].size() > c_garbage) rep.violations.push_back(rg.assemblies[i]);
  rep.pass = rep.violations.empty() && rep.frontier_hits > 0;
  return rep;
}

ProbeReport adversarial_probe(const CompiledSystem& cs, std::size_t horizon) {
  AuditOptions quiet;
  quiet.check_terminal = false;
  auto audit = audit_run(cs, quiet);
  return adversarial_probe(cs.config(), audit.scripted_states, cs.target, cs.policy.c_garbage, horizon,
                           cs.target.size() + 64);
}

}  // namespace negglue
