#include "layout.hpp"

#include "negglue/errors.hpp"

namespace negglue::detail {

Layout::Layout(Vec2 origin, const std::vector<std::string>& rows) {
  for (std::size_t y = 0; y < rows.size(); ++y)
    for (std::size_t x = 0; x < rows[y].size(); ++x)
      if (rows[y][x] != '.')
        owner_[origin + Vec2{static_cast<int>(x), static_cast<int>(y)}] = rows[y][x];
}

void Layout::face(Vec2 p, Side s, const std::string& label) {
  if (!owner_.count(p)) throw Error("layout: no piece at " + std::to_string(p.x) + "," + std::to_string(p.y));
  glues_[p][static_cast<int>(s)] = label;
}

void Layout::bond(Vec2 p, Side s, const std::string& label) {
  face(p, s, label);
  Vec2 q = p + step(s);
  if (owner_.count(q)) glues_[q][static_cast<int>(opposite(s))] = label;
}

void Layout::mirror() {
  std::map<Vec2, char> owner;
  std::map<Vec2, std::array<std::string, 4>> glues;
  for (const auto& [p, c] : owner_) owner[{p.x, -p.y}] = c;
  for (const auto& [p, g] : glues_) {
    auto m = g;
    std::swap(m[static_cast<int>(Side::North)], m[static_cast<int>(Side::South)]);
    glues[{p.x, -p.y}] = m;
  }
  owner_ = std::move(owner);
  glues_ = std::move(glues);
}

std::vector<Vec2> Layout::cells_of(char piece) const {
  std::vector<Vec2> out;
  for (const auto& [p, c] : owner_)
    if (c == piece) out.push_back(p);
  return out;
}

PositionedAssembly Layout::piece(char c, const std::string& name) const {
  PositionedAssembly a;
  for (Vec2 p : cells_of(c)) {
    std::array<std::string, 4> g{};
    if (auto it = glues_.find(p); it != glues_.end()) g = it->second;
    for (Side s : kSides) {
      auto n = owner_.find(p + step(s));
      if (n != owner_.end() && n->second == c) g[static_cast<int>(s)] = name + "!";
    }
    a.place(p, make_tile(g[0], g[1], g[2], g[3]));
  }
  return a;
}

TraceBuilder::TraceBuilder(GadgetLibrary& lib, Layout layout, std::string trace)
    : lib_(lib), layout_(std::move(layout)) {
  script_.name = std::move(trace);
}

void TraceBuilder::piece(char c, const std::string& name, GadgetCategory cat, const std::string& variant,
                         int special) {
  PositionedAssembly placed = layout_.piece(c, name);
  if (placed.empty()) throw Error("layout: piece '" + std::string(1, c) + "' has no cells");
  Vec2 origin = placed.min_coord();
  PositionedAssembly body = placed.translated(Vec2{} - origin);
  if (const Gadget* g = lib_.find(name)) {
    if (!(g->body == body)) throw Error("layout: gadget '" + name + "' drawn inconsistently in " + script_.name);
  } else {
    lib_.gadgets.push_back({name, cat, variant, special, body});
  }
  placed_[c] = {name, origin};
}

Placement TraceBuilder::at(char c) const {
  auto it = placed_.find(c);
  if (it == placed_.end()) throw Error("layout: piece '" + std::string(1, c) + "' not declared");
  return it->second;
}

void TraceBuilder::start(char host, char guest, int expected, const std::string& expr) {
  script_.steps.push_back({TraceStep::Kind::Combine, placement_text(at(host)), {at(guest)}, expected, expr});
}

void TraceBuilder::combine(char c, int expected, const std::string& expr) {
  script_.steps.push_back({TraceStep::Kind::Combine, "$", {at(c)}, expected, expr});
}

void TraceBuilder::detach(const std::string& pieces, int expected, const std::string& expr) {
  TraceStep st{TraceStep::Kind::Break, "$", {}, expected, expr};
  for (char c : pieces) st.rhs.push_back(at(c));
  script_.steps.push_back(std::move(st));
}

void TraceBuilder::finish() { lib_.traces.push_back(std::move(script_)); }

}  // namespace negglue::detail
