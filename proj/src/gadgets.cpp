#include "negglue/gadgets.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "negglue/errors.hpp"

namespace negglue {

namespace {

constexpr std::array<const char*, kGadgetCategoryCount> kCategoryNames{
    "overlay_initiator", "overlay_helper", "read",       "read_helper",    "info_block",
    "walker",            "walker_helper",  "extender",   "extender_helper", "reducer",
    "reducer_helper",    "fill_initiator", "fill_block", "tape_section",   "buffer"};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw LoadError(where, "expected an integer, got '" + s + "'");
  }
}

std::string glue_token(GlueId g) { return g == kNoGlue ? "-" : glue_name(g); }

PositionedAssembly place(const GadgetLibrary& lib, const Placement& p, const std::string& trace,
                         std::size_t step) {
  const Gadget* g = lib.find(p.gadget);
  if (!g) throw TraceDivergence(trace, step, "unknown gadget '" + p.gadget + "'");
  return g->body.translated(p.offset);
}

struct Runner {
  const TraceScript& script;
  const GadgetLibrary& lib;
  SystemConfig cfg;
  PositionedAssembly current;
  std::vector<ReactionEvent> log;

  void run() {
    for (std::size_t i = 0; i < script.steps.size(); ++i) apply(i, script.steps[i]);
  }

  [[noreturn]] void diverge(std::size_t i, const std::string& why) const {
    throw TraceDivergence(script.name, i + 1, why);
  }

  void apply(std::size_t i, const TraceStep& st) {
    ReactionEvent ev;
    ev.kind = st.kind;
    ev.lhs = st.lhs;
    ev.expression = st.expression;
    for (std::size_t k = 0; k < st.rhs.size(); ++k) ev.rhs += (k ? "|" : "") + placement_text(st.rhs[k]);
    if (st.kind == TraceStep::Kind::Combine) {
      PositionedAssembly host;
      if (st.lhs == "$") {
        if (current.empty()) diverge(i, "no running assembly to combine with");
        host = current;
      } else {
        host = place(lib, parse_placement(st.lhs), script.name, i + 1);
      }
      if (st.rhs.size() != 1) diverge(i, "combine takes exactly one placed gadget");
      PositionedAssembly piece = place(lib, st.rhs[0], script.name, i + 1);
      auto s = boundary_strength(host, piece, cfg.strengths);
      if (!s) diverge(i, "placed gadget overlaps the assembly");
      ev.strength = *s;
      if (*s < cfg.tau) diverge(i, "boundary strength " + std::to_string(*s) + " is below tau");
      if (*s != st.expected)
        diverge(i, "boundary strength " + std::to_string(*s) + " != expected " + std::to_string(st.expected));
      ev.size_before = host.size();
      for (const auto& [p, t] : piece.tiles()) host.place(p, t);
      current = std::move(host);
      ev.size_after = current.size();
    } else {
      if (st.lhs != "$") diverge(i, "break applies to the running assembly");
      std::set<Vec2> leaving;
      for (const auto& pl : st.rhs) {
        auto piece = place(lib, pl, script.name, i + 1);
        for (const auto& [p, t] : piece.tiles()) {
          const Tile* here = current.at(p);
          if (!here || !(*here == t)) diverge(i, "piece " + placement_text(pl) + " is not part of the assembly");
          leaving.insert(p);
        }
      }
      if (leaving.size() == current.size()) diverge(i, "break would remove the whole assembly");
      std::set<Vec2> staying;
      for (const auto& [p, _] : current.tiles())
        if (!leaving.count(p)) staying.insert(p);
      if (!positively_connected(current, leaving, cfg.strengths) ||
          !positively_connected(current, staying, cfg.strengths))
        diverge(i, "a side of the cut is not positively connected");
      int s = cut_strength(current, leaving, cfg.strengths);
      ev.strength = s;
      if (s >= cfg.tau) diverge(i, "cut strength " + std::to_string(s) + " is not below tau");
      if (s != st.expected)
        diverge(i, "cut strength " + std::to_string(s) + " != expected " + std::to_string(st.expected));
      ev.size_before = current.size();
      ev.detached = leaving.size();
      PositionedAssembly rest;
      for (Vec2 p : staying) rest.place(p, *current.at(p));
      current = std::move(rest);
      ev.size_after = current.size();
    }
    log.push_back(std::move(ev));
  }
};

}  // namespace

std::string category_name(GadgetCategory c) { return kCategoryNames[static_cast<int>(c)]; }

std::optional<GadgetCategory> parse_category(const std::string& s) {
  for (int i = 0; i < kGadgetCategoryCount; ++i)
    if (s == kCategoryNames[i]) return static_cast<GadgetCategory>(i);
  return std::nullopt;
}

const Gadget* GadgetLibrary::find(const std::string& name) const {
  for (const auto& g : gadgets)
    if (g.name == name) return &g;
  return nullptr;
}

const TraceScript* GadgetLibrary::find_trace(const std::string& name) const {
  for (const auto& t : traces)
    if (t.name == name) return &t;
  return nullptr;
}

Placement parse_placement(const std::string& token) {
  Placement p;
  auto at = token.find('@');
  p.gadget = token.substr(0, at);
  if (at == std::string::npos) return p;
  auto parts = split_on(token.substr(at + 1), ',');
  if (parts.size() != 2) throw LoadError(token, "placement offset must be x,y");
  p.offset = {parse_int(parts[0], token), parse_int(parts[1], token)};
  return p;
}

std::string placement_text(const Placement& p) {
  return p.gadget + "@" + std::to_string(p.offset.x) + "," + std::to_string(p.offset.y);
}

GadgetLibrary parse_gadgets(const std::string& text, const std::string& where, const LoadOptions& opts) {
  GadgetLibrary lib;
  lib.strengths = StrengthTable();
  enum class Block { None, Library, Strengths, Gadget, Trace, Other } block = Block::None;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<Vec2, Tile> pending;
  auto loc = [&] { return where + ":" + std::to_string(lineno); };
  auto finish_gadget = [&] {
    if (block != Block::Gadget) return;
    Gadget& g = lib.gadgets.back();
    if (pending.empty()) throw LoadError(where, "gadget '" + g.name + "' has no tiles");
    PositionedAssembly body(std::move(pending));
    g.body = body.translated(Vec2{} - body.min_coord());
    pending.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0].front() == '[') {
      finish_gadget();
      std::string head = line.substr(line.find('[') + 1);
      auto close = head.find(']');
      if (close == std::string::npos) throw LoadError(loc(), "unterminated block header");
      auto h = split_ws(head.substr(0, close));
      if (h.empty()) throw LoadError(loc(), "empty block header");
      if (h[0] == "library") {
        block = Block::Library;
      } else if (h[0] == "strengths") {
        block = Block::Strengths;
      } else if (h[0] == "gadget") {
        if (h.size() != 4) throw LoadError(loc(), "gadget header needs name, category and variant");
        if (lib.find(h[1])) throw LoadError(loc(), "duplicate gadget '" + h[1] + "'");
        auto cat = parse_category(h[2]);
        if (!cat) throw LoadError(loc(), "unknown category '" + h[2] + "'");
        Gadget g;
        g.name = h[1];
        g.category = *cat;
        auto v = split_on(h[3], ':');
        g.variant = v[0];
        if (g.variant != "F" && g.variant != "L" && g.variant != "R" && g.variant != "none")
          throw LoadError(loc(), "unknown variant '" + h[3] + "'");
        if (v.size() > 1) g.special = parse_int(v[1], loc());
        lib.gadgets.push_back(std::move(g));
        block = Block::Gadget;
      } else if (h[0] == "trace") {
        if (h.size() != 2) throw LoadError(loc(), "trace header needs a name");
        lib.traces.push_back({h[1], {}});
        block = Block::Trace;
      } else {
        block = Block::Other;
      }
      continue;
    }
    switch (block) {
      case Block::Library:
        if (tok.size() == 2 && tok[0] == "tau") {
          lib.tau = parse_int(tok[1], loc());
          if (lib.tau < 1) throw LoadError(loc(), "tau must be positive");
        } else {
          throw LoadError(loc(), "unknown library setting");
        }
        break;
      case Block::Strengths:
        if (tok.size() != 2) throw LoadError(loc(), "strength rows are 'label value'");
        lib.strengths.set(tok[0], parse_int(tok[1], loc()));
        break;
      case Block::Gadget: {
        if (tok.size() != 6) throw LoadError(loc(), "tile rows are 'x y N E S W'");
        Vec2 p{parse_int(tok[0], loc()), parse_int(tok[1], loc())};
        if (!pending.emplace(p, make_tile(tok[2], tok[3], tok[4], tok[5])).second)
          throw LoadError(loc(), "two tiles at one position in '" + lib.gadgets.back().name + "'");
        break;
      }
      case Block::Trace: {
        if (tok.size() < 4 || tok.size() > 5) throw LoadError(loc(), "trace rows are 'kind lhs rhs expected [sum]'");
        TraceStep st;
        if (tok[0] == "combine")
          st.kind = TraceStep::Kind::Combine;
        else if (tok[0] == "break")
          st.kind = TraceStep::Kind::Break;
        else
          throw LoadError(loc(), "unknown step kind '" + tok[0] + "'");
        st.lhs = tok[1];
        for (const auto& part : split_on(tok[2], '|')) st.rhs.push_back(parse_placement(part));
        st.expected = parse_int(tok[3], loc());
        if (tok.size() == 5) st.expression = tok[4];
        lib.traces.back().steps.push_back(std::move(st));
        break;
      }
      case Block::None:
        throw LoadError(loc(), "content outside any block");
      case Block::Other:
        break;
    }
  }
  finish_gadget();

  SystemConfig cfg = library_config(lib);
  for (const auto& g : lib.gadgets) {
    for (const auto& [p, t] : g.body.tiles())
      for (Side s : kSides)
        if (t.glue(s) != kNoGlue && !lib.strengths.resolves(glue_name(t.glue(s))))
          throw LoadError(where, "gadget '" + g.name + "' uses unknown glue '" + glue_name(t.glue(s)) + "'");
    if (opts.check_stability) {
      if (!positively_connected(g.body, lib.strengths))
        throw LoadError(where, "gadget '" + g.name + "' is not connected by positive bonds");
      if (!is_tau_stable(g.body, cfg).stable) throw LoadError(where, "gadget '" + g.name + "' is not tau-stable");
    }
  }
  for (const auto& t : lib.traces)
    for (const auto& st : t.steps)
      for (const auto& pl : st.rhs)
        if (!lib.find(pl.gadget))
          throw LoadError(where, "trace '" + t.name + "' names unknown gadget '" + pl.gadget + "'");
  if (opts.require_all_categories) {
    std::set<GadgetCategory> seen;
    for (const auto& g : lib.gadgets) seen.insert(g.category);
    for (int i = 0; i < kGadgetCategoryCount; ++i)
      if (!seen.count(static_cast<GadgetCategory>(i)))
        throw LoadError(where, std::string("library has no ") + kCategoryNames[i] + " gadget");
  }
  return lib;
}

GadgetLibrary load_gadgets(const std::string& path, const LoadOptions& opts) {
  std::ifstream f(path);
  if (!f) throw LoadError(path, "cannot open");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_gadgets(ss.str(), path, opts);
}

std::string serialize_gadgets(const GadgetLibrary& lib) {
  std::ostringstream os;
  os << "[library]\ntau " << lib.tau << "\n\n[strengths]\n";
  for (const auto& [k, v] : lib.strengths.entries()) os << k << ' ' << v << '\n';
  for (const auto& g : lib.gadgets) {
    os << "\n[gadget " << g.name << ' ' << category_name(g.category) << ' ' << g.variant;
    if (g.special) os << ':' << g.special;
    os << "]\n";
    for (const auto& [p, t] : g.body.tiles()) {
      os << p.x << ' ' << p.y;
      for (Side s : kSides) os << ' ' << glue_token(t.glue(s));
      os << '\n';
    }
  }
  for (const auto& tr : lib.traces) {
    os << "\n[trace " << tr.name << "]\n";
    for (const auto& st : tr.steps) {
      os << (st.kind == TraceStep::Kind::Combine ? "combine " : "break ") << st.lhs << ' ';
      for (std::size_t k = 0; k < st.rhs.size(); ++k) os << (k ? "|" : "") << placement_text(st.rhs[k]);
      os << ' ' << st.expected;
      if (!st.expression.empty()) os << ' ' << st.expression;
      os << '\n';
    }
  }
  return os.str();
}

std::map<std::string, TraceScript> trace_catalog() {
  std::map<std::string, TraceScript> out;
  for (auto& t : build_default_library().traces) out.emplace(t.name, std::move(t));
  return out;
}

std::string default_gadget_path() { return std::string(NEGGLUE_DATA_DIR) + "/gadgets.txt"; }

std::string ReactionEvent::line() const {
  std::ostringstream os;
  os << (kind == TraceStep::Kind::Combine ? "combine" : "break") << " lhs=" << lhs << " rhs=" << rhs
     << " strength=" << strength << " size=" << size_before << "->" << size_after;
  if (kind == TraceStep::Kind::Break) os << " detached=" << detached;
  if (!expression.empty()) os << " sum=" << expression;
  return os.str();
}

SystemConfig library_config(const GadgetLibrary& lib) {
  SystemConfig cfg;
  cfg.tau = lib.tau;
  cfg.strengths = lib.strengths;
  cfg.exact_limit = exact_limit_from_env(cfg.exact_limit);
  for (const auto& g : lib.gadgets) cfg.supply.push_back({g.name, g.body});
  return cfg;
}

std::vector<ReactionEvent> replay(const TraceScript& script, const GadgetLibrary& lib) {
  Runner r{script, lib, library_config(lib), {}, {}};
  r.run();
  return r.log;
}

PositionedAssembly replay_result(const TraceScript& script, const GadgetLibrary& lib) {
  Runner r{script, lib, library_config(lib), {}, {}};
  r.run();
  return r.current;
}

}  // namespace negglue
