#include "negglue/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "negglue/errors.hpp"

namespace negglue {

namespace {

using Faces = std::map<std::pair<Vec2, Side>, std::string>;

// Tiles on `cells`; faces between two cells get `internal`, listed faces get
// their label, everything else is bare.
PositionedAssembly build_piece(const std::set<Vec2>& cells, const std::string& internal, const Faces& faces) {
  PositionedAssembly a;
  for (Vec2 p : cells) {
    std::array<std::string, 4> g{"-", "-", "-", "-"};
    for (Side s : kSides) {
      if (cells.count(p + step(s))) {
        g[static_cast<int>(s)] = internal;
      } else if (auto it = faces.find({p, s}); it != faces.end()) {
        g[static_cast<int>(s)] = it->second;
      }
    }
    a.place(p, make_tile(g[0], g[1], g[2], g[3]));
  }
  return a;
}

std::string num(long long v) { return std::to_string(v); }

const std::string kTapeBond = "K1";
const std::string kRepel = "D";
const std::string kDockN = "E1";
const std::string kDockE = "E2";
const std::string kDockW = "E3";

std::string bottom_bond(std::size_t unit) { return "C" + num(static_cast<long long>(unit)); }
std::string block_link(std::size_t j) { return "S" + num(static_cast<long long>(j)); }
std::string south_dock(std::size_t i) { return "W" + num(static_cast<long long>(i)); }

Vec2 edge_cell(Side s) {
  switch (s) {
    case Side::North: return {10, 0};
    case Side::South: return {10, kBlockSide - 1};
    case Side::East: return {kBlockSide - 1, 10};
    case Side::West: return {0, 10};
  }
  return {};
}

// Messenger tile and face that touch the next block for each exit side.
std::pair<Vec2, Side> exit_contact(Side exit) {
  switch (exit) {
    case Side::East: return {{3, -1}, Side::East};
    case Side::West: return {{-1, -1}, Side::West};
    case Side::North: return {{1, -1}, Side::North};
    case Side::South: return {{1, 1}, Side::South};
  }
  return {};
}

std::string exit_label(Side exit, std::size_t i) {
  switch (exit) {
    case Side::East: return kDockE;
    case Side::West: return kDockW;
    case Side::North: return kDockN;
    case Side::South: return south_dock(i);
  }
  return "-";
}

PositionedAssembly make_reader(int bit0, int bit1, const std::string& internal) {
  std::set<Vec2> cells(reader_cells().begin(), reader_cells().end());
  Faces f;
  for (int x = -1; x <= 3; ++x) f[{{x, -1}, Side::North}] = kDockN;
  f[{{-1, -1}, Side::West}] = kDockW;
  f[{{-1, 0}, Side::West}] = kDockW;
  f[{{-1, 0}, Side::East}] = kTapeBond;
  f[{{1, -1}, Side::South}] = "q" + num(bit0);
  f[{{2, -1}, Side::South}] = "i" + num(bit1);
  f[{{3, -1}, Side::South}] = kRepel;
  f[{{3, -1}, Side::East}] = kDockE;
  auto body = build_piece(cells, internal, f);
  return body.translated(Vec2{} - body.min_coord());
}

void require_resolves(const PositionedAssembly& a, const StrengthTable& s, const std::string& what) {
  for (const auto& [p, t] : a.tiles())
    for (Side d : kSides)
      if (t.glue(d) != kNoGlue && !s.resolves(glue_name(t.glue(d))))
        throw Error(what + " uses glue '" + glue_name(t.glue(d)) + "' missing from the strength table");
}

long long ceil_log2(long long v) {
  long long r = 0;
  while ((1LL << r) < v) ++r;
  return r;
}

long long floor_log2(long long v) {
  long long r = 0;
  while ((1LL << (r + 1)) <= v) ++r;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

Shape parse_shape(const std::string& text) {
  std::set<Vec2> cells;
  auto rows = lines_of(text);
  for (std::size_t y = 0; y < rows.size(); ++y) {
    std::string row = rows[y];
    if (!row.empty() && row.back() == '\r') row.pop_back();
    for (std::size_t x = 0; x < row.size(); ++x) {
      char c = row[x];
      if (c == '#')
        cells.insert({static_cast<int>(x), static_cast<int>(y)});
      else if (c != '.' && c != ' ')
        throw LoadError("shape", std::string("unexpected character '") + c + "'");
    }
  }
  if (cells.empty()) throw EmptyShape();
  Shape sh(cells);
  if (!sh.is_connected()) throw DisconnectedShape();
  return sh;
}

std::string shape_text(const Shape& sh) {
  if (sh.cells().empty()) return "";
  int x0 = sh.cells().begin()->x, x1 = x0, y0 = sh.cells().begin()->y, y1 = y0;
  for (Vec2 c : sh.cells()) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  std::string out;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) out += sh.cells().count({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Vec2 first_cell(const Shape& sh) {
  if (sh.cells().empty()) throw EmptyShape();
  return *sh.cells().begin();
}

SpanningTree spanning_tree(const Shape& sh) {
  SpanningTree t;
  Vec2 root = first_cell(sh);
  std::set<Vec2> seen{root};
  t.nodes.push_back(root);
  std::vector<std::pair<Vec2, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [cell, next] = stack.back();
    if (next == 4) {
      stack.pop_back();
      continue;
    }
    Vec2 n = cell + step(kSides[next++]);
    if (!sh.cells().count(n) || seen.count(n)) continue;
    seen.insert(n);
    t.nodes.push_back(n);
    t.edges.push_back({cell, n});
    stack.push_back({n, 0});
  }
  return t;
}

std::string InstructionSequence::text() const {
  std::string s;
  for (Move m : moves) s += static_cast<char>(m);
  return s;
}

InstructionSequence tree_outline_instructions(const Shape& sh) {
  auto tree = spanning_tree(sh);
  // Each cell becomes a 2x2 ring; a tree edge splices two rings together.
  std::map<Vec2, std::set<Vec2>> adj;
  auto link = [&](Vec2 a, Vec2 b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  auto unlink = [&](Vec2 a, Vec2 b) {
    adj[a].erase(b);
    adj[b].erase(a);
  };
  for (Vec2 c : sh.cells()) {
    Vec2 tl = c * 2, tr = tl + Vec2{1, 0}, bl = tl + Vec2{0, 1}, br = tl + Vec2{1, 1};
    link(tl, tr);
    link(tr, br);
    link(br, bl);
    link(bl, tl);
  }
  for (auto [u, v] : tree.edges) {
    if (v < u) std::swap(u, v);
    Vec2 ut = u * 2, vt = v * 2;
    if (v.x == u.x + 1) {
      unlink(ut + Vec2{1, 0}, ut + Vec2{1, 1});
      unlink(vt, vt + Vec2{0, 1});
      link(ut + Vec2{1, 0}, vt);
      link(ut + Vec2{1, 1}, vt + Vec2{0, 1});
    } else {
      unlink(ut + Vec2{0, 1}, ut + Vec2{1, 1});
      unlink(vt, vt + Vec2{1, 0});
      link(ut + Vec2{0, 1}, vt);
      link(ut + Vec2{1, 1}, vt + Vec2{1, 0});
    }
  }
  InstructionSequence seq;
  seq.start = first_cell(sh) * 2;
  seq.heading = Side::East;
  Vec2 prev = seq.start, cur = seq.start + step(Side::East);
  if (!adj[prev].count(cur)) throw Error("outline tour does not leave its start eastward");
  Side heading = Side::East;
  std::size_t visited = 1;
  while (cur != seq.start) {
    Side dir = Side::North;
    for (Side s : kSides)
      if (prev + step(s) == cur) dir = s;
    if (dir == heading)
      seq.moves.push_back(Move::F);
    else if (dir == rotate_cw(heading, 1))
      seq.moves.push_back(Move::R);
    else if (dir == rotate_cw(heading, 3))
      seq.moves.push_back(Move::L);
    else
      throw Error("outline tour reverses");
    heading = dir;
    ++visited;
    const auto& nb = adj[cur];
    if (nb.size() != 2) throw Error("outline is not a cycle");
    Vec2 next = *nb.begin() == prev ? *std::next(nb.begin()) : *nb.begin();
    prev = cur;
    cur = next;
  }
  if (visited != 4 * sh.size()) throw Error("outline tour misses cells");
  return seq;
}

std::vector<Vec2> walk_cells(const InstructionSequence& seq) {
  std::vector<Vec2> out{seq.start};
  Vec2 p = seq.start;
  for (Side h : walk_headings(seq)) {
    p = p + step(h);
    out.push_back(p);
  }
  return out;
}

std::vector<Side> walk_headings(const InstructionSequence& seq) {
  std::vector<Side> out;
  Side h = seq.heading;
  for (Move m : seq.moves) {
    if (m == Move::L) h = rotate_cw(h, 3);
    if (m == Move::R) h = rotate_cw(h, 1);
    out.push_back(h);
  }
  return out;
}

std::pair<int, int> move_bits(Move m) {
  switch (m) {
    case Move::F: return {0, 0};
    case Move::L: return {0, 1};
    case Move::R: return {1, 0};
  }
  return {1, 1};
}

const std::vector<Vec2>& reader_cells() {
  static const std::vector<Vec2> c{{-1, -1}, {0, -1}, {1, -1}, {2, -1}, {3, -1}, {-1, 0}};
  return c;
}

const std::vector<Vec2>& messenger_cells() {
  static const std::vector<Vec2> c = [] {
    std::vector<Vec2> v = reader_cells();
    for (int y = 0; y < 2; ++y)
      for (int x = 0; x < kUnitWidth; ++x) v.push_back({x, y});
    std::sort(v.begin(), v.end());
    return v;
  }();
  return c;
}

Vec2 dock_offset(Side exit) {
  switch (exit) {
    case Side::East: return {8, 5};
    case Side::West: return {1, 5};
    case Side::North: return {5, 1};
    case Side::South: return {5, 10};
  }
  return {};
}

InstructionTape instructions_to_tape(const InstructionSequence& seq, const GadgetLibrary& lib) {
  if (seq.moves.empty()) throw Error("instruction sequence is empty");
  const auto headings = walk_headings(seq);
  InstructionTape tape;
  tape.sections = seq.moves.size();
  const std::size_t units = seq.moves.size() + 1;
  for (std::size_t u = 0; u <= units; ++u) {
    Vec2 o{static_cast<int>(u) * kUnitWidth, 0};
    tape.unit_origins.push_back(o);
    const std::string internal = "tape" + num(static_cast<long long>(u)) + "!";
    std::set<Vec2> cells;
    Faces f;
    if (u == units) {
      cells = {o, o + Vec2{0, 1}};
      f[{o, Side::North}] = kRepel;
      f[{o, Side::West}] = kTapeBond;
      f[{o + Vec2{0, 1}, Side::West}] = bottom_bond(u);
    } else {
      for (int y = 0; y < 2; ++y)
        for (int x = 0; x < kUnitWidth; ++x) cells.insert(o + Vec2{x, y});
      auto [b0, b1] = u == 0 ? std::pair{1, 1} : move_bits(seq.moves[u - 1]);
      f[{o, Side::North}] = kRepel;
      f[{o, Side::West}] = kTapeBond;
      f[{o + Vec2{1, 0}, Side::North}] = "q" + num(b0);
      f[{o + Vec2{2, 0}, Side::North}] = "i" + num(b1);
      f[{o + Vec2{2, 0}, Side::East}] = kTapeBond;
      if (u > 0) f[{o + Vec2{0, 1}, Side::West}] = bottom_bond(u);
      f[{o + Vec2{2, 1}, Side::East}] = bottom_bond(u + 1);
      if (u > 0 && headings[u - 1] == Side::South) f[{o + Vec2{1, 1}, Side::South}] = south_dock(u - 1);
    }
    auto piece = build_piece(cells, internal, f);
    for (const auto& [p, t] : piece.tiles()) tape.assembly.place(p, t);
  }
  require_resolves(tape.assembly, lib.strengths, "tape");
  return tape;
}

BaseConversionPlan base_conversion_plan(long long k) {
  BaseConversionPlan p;
  p.k = k;
  if (k < 4) {
    p.b = 2;
    p.d = k;
  } else {
    const long double lg = std::log2(static_cast<long double>(k));
    const long double q = static_cast<long double>(k) / lg;
    p.b = static_cast<long long>(std::ceil(q - 1e-12L));
    const long long bits_per_digit = std::max(1LL, floor_log2(p.b));
    p.d = (k + bits_per_digit - 1) / bits_per_digit;
  }
  p.tape_tiles = kDigitTiles * p.d;
  p.tm_tiles = kTmTilesPerSymbol * p.b + kTmFixedTiles;
  return p;
}

long long system_bit_encoding_size(long long tile_count, int tau) {
  if (tile_count < 1) throw Error("tile count must be positive");
  return 4 * tile_count * ceil_log2(4 * tile_count) + ceil_log2(static_cast<long long>(tau) + 1);
}

std::size_t measured_garbage_bound(const GadgetLibrary& lib) {
  std::size_t best = 0;
  for (const auto& t : lib.traces)
    for (const auto& ev : replay(t, lib)) best = std::max(best, ev.detached);
  return best;
}

SystemConfig CompiledSystem::config() const {
  SystemConfig cfg = library_config(system);
  cfg.supply.insert(cfg.supply.begin(), SupplyItem{"tape", tape.assembly});
  return cfg;
}

std::string CompiledSystem::reader_for(std::size_t section) const {
  return std::string("read.") + static_cast<char>(seq.moves.at(section));
}

std::string CompiledSystem::block_name(std::size_t j) const { return "block." + num(static_cast<long long>(j)); }

Vec2 CompiledSystem::block_origin(std::size_t j) const { return path.at(j) * kBlockSide; }

std::size_t CompiledSystem::tile_type_count() const {
  std::set<Tile> types;
  for (const auto& g : system.gadgets)
    for (const auto& [p, t] : g.body.tiles()) types.insert(t);
  for (const auto& [p, t] : tape.assembly.tiles()) types.insert(t);
  return types.size();
}

namespace {

void derive_path(CompiledSystem& cs) {
  cs.tree = spanning_tree(cs.input);
  cs.seq = tree_outline_instructions(cs.input);
  cs.path = walk_cells(cs.seq);
  cs.exits = walk_headings(cs.seq);
  cs.target = scale(cs.input, kTargetScale);
}

PositionedAssembly make_block(const CompiledSystem& cs, std::size_t j) {
  const std::size_t n = cs.seq.moves.size();
  std::set<Vec2> cells;
  for (int y = 0; y < kBlockSide; ++y)
    for (int x = 0; x < kBlockSide; ++x) cells.insert({x, y});
  Faces f;
  if (j < n) {
    Side exit = cs.exits[j];
    Vec2 o = dock_offset(exit);
    for (Vec2 m : messenger_cells()) cells.erase(o + m);
    f[{o + Vec2{3, 0}, Side::West}] = kTapeBond;
    f[{o + Vec2{3, 1}, Side::West}] = bottom_bond(j + 2);
    f[{edge_cell(exit), exit}] = block_link(j + 1);
  }
  if (j > 0) {
    Side came = cs.exits[j - 1];
    f[{edge_cell(opposite(came)), opposite(came)}] = block_link(j);
    auto [tile, face] = exit_contact(came);
    Vec2 across = dock_offset(came) + tile + step(face) - step(came) * kBlockSide;
    f[{across, opposite(face)}] = exit_label(came, j - 1);
  }
  return build_piece(cells, cs.block_name(j) + "!", f);
}

}  // namespace

CompiledSystem compile(const Shape& sh, const GadgetLibrary& lib, int tau) {
  if (sh.cells().empty()) throw EmptyShape();
  if (!sh.is_connected()) throw DisconnectedShape();
  CompiledSystem cs;
  cs.input = sh;
  derive_path(cs);
  cs.tape = instructions_to_tape(cs.seq, lib);
  cs.system.tau = tau;
  cs.system.strengths = lib.strengths;
  const std::pair<const char*, Move> readers[] = {{"F", Move::F}, {"L", Move::L}, {"R", Move::R}};
  for (const auto& [v, m] : readers) {
    auto [b0, b1] = move_bits(m);
    std::string name = std::string("read.") + v;
    cs.system.gadgets.push_back({name, GadgetCategory::Read, v, 0, make_reader(b0, b1, name + "!")});
  }
  cs.system.gadgets.push_back(
      {"overlay.initiator", GadgetCategory::OverlayInitiator, "none", 0, make_reader(1, 1, "overlay.initiator!")});
  for (std::size_t j = 0; j < cs.path.size(); ++j)
    cs.system.gadgets.push_back({cs.block_name(j), GadgetCategory::FillBlock, "none", 0, make_block(cs, j)});
  for (const auto& g : cs.system.gadgets) require_resolves(g.body, lib.strengths, g.name);
  return cs;
}

long long description_bits(const Shape& sh) {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  for (Vec2 c : sh.cells()) {
    if (first) {
      x0 = x1 = c.x;
      y0 = y1 = c.y;
      first = false;
    }
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  return static_cast<long long>(x1 - x0 + 1) * (y1 - y0 + 1);
}

std::string serialize_compiled(const CompiledSystem& cs) {
  std::ostringstream os;
  os << serialize_gadgets(cs.system);
  os << "\n[tape]\n";
  for (const auto& [p, t] : cs.tape.assembly.tiles()) {
    os << p.x << ' ' << p.y;
    for (Side s : kSides) os << ' ' << (t.glue(s) == kNoGlue ? std::string("-") : glue_name(t.glue(s)));
    os << '\n';
  }
  auto plan = base_conversion_plan(description_bits(cs.input));
  os << "\n[meta]\n";
  os << "scale " << kTargetScale << '\n';
  os << "c_garbage " << cs.policy.c_garbage << '\n';
  os << "instructions " << cs.seq.text() << '\n';
  os << "sections " << cs.tape.sections << '\n';
  os << "target_cells " << cs.target.size() << '\n';
  os << "tape_tiles " << cs.tape_tile_count() << '\n';
  os << "tile_types " << cs.tile_type_count() << '\n';
  os << "encoding_bits " << system_bit_encoding_size(static_cast<long long>(cs.tile_type_count()), cs.system.tau)
     << '\n';
  os << "description_bits " << plan.k << '\n';
  os << "plan_base " << plan.b << '\n';
  os << "plan_digits " << plan.d << '\n';
  os << "plan_tape_tiles " << plan.tape_tiles << '\n';
  os << "plan_tm_tiles " << plan.tm_tiles << '\n';
  for (const auto& row : lines_of(shape_text(cs.input))) os << "shape " << row << '\n';
  return os.str();
}

CompiledSystem parse_compiled(const std::string& text, const std::string& where) {
  CompiledSystem cs;
  cs.system = parse_gadgets(text, where, LoadOptions{false, true});
  std::string block;
  std::string shape_rows, instructions;
  bool have_garbage = false;
  int lineno = 0;
  for (auto line : lines_of(text)) {
    ++lineno;
    const std::string loc = where + ":" + num(lineno);
    if (auto h = line.find('#'); h != std::string::npos && block != "meta") line.erase(h);
    std::istringstream is(line);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0].front() == '[') {
      block = tok[0] == "[tape]" ? "tape" : tok[0] == "[meta]" ? "meta" : "other";
      continue;
    }
    if (block == "tape") {
      if (tok.size() != 6) throw LoadError(loc, "tape rows are 'x y N E S W'");
      Vec2 p;
      try {
        p = {std::stoi(tok[0]), std::stoi(tok[1])};
      } catch (const std::exception&) {
        throw LoadError(loc, "bad tape coordinate");
      }
      if (!cs.tape.assembly.place(p, make_tile(tok[2], tok[3], tok[4], tok[5])))
        throw LoadError(loc, "two tape tiles at one position");
    } else if (block == "meta") {
      if (tok[0] == "shape") {
        shape_rows += (tok.size() > 1 ? tok[1] : std::string()) + "\n";
      } else if (tok[0] == "instructions" && tok.size() == 2) {
        instructions = tok[1];
      } else if (tok[0] == "c_garbage" && tok.size() == 2) {
        try {
          cs.policy.c_garbage = static_cast<std::size_t>(std::stoul(tok[1]));
        } catch (const std::exception&) {
          throw LoadError(loc, "bad c_garbage");
        }
        have_garbage = true;
      }
    }
  }
  if (cs.tape.assembly.empty()) throw LoadError(where, "missing [tape] block");
  if (shape_rows.empty() || !have_garbage) throw LoadError(where, "missing [meta] shape or c_garbage");
  try {
    cs.input = parse_shape(shape_rows);
  } catch (const Error& e) {
    throw LoadError(where, std::string("bad shape: ") + e.what());
  }
  derive_path(cs);
  if (cs.seq.text() != instructions) throw LoadError(where, "instructions do not match the shape");
  cs.tape.sections = cs.seq.moves.size();
  for (std::size_t u = 0; u <= cs.tape.sections + 1; ++u)
    cs.tape.unit_origins.push_back({static_cast<int>(u) * kUnitWidth, 0});
  for (const auto& [p, t] : cs.tape.assembly.tiles())
    for (Side s : kSides)
      if (t.glue(s) != kNoGlue && !cs.system.strengths.resolves(glue_name(t.glue(s))))
        throw LoadError(where, "tape uses unknown glue '" + glue_name(t.glue(s)) + "'");
  return cs;
}

CompiledSystem load_compiled(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoadError(path, "cannot open");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_compiled(ss.str(), path);
}

}  // namespace negglue
