#include "negglue/render.hpp"

#include <array>
#include <climits>
#include <sstream>

#include "negglue/errors.hpp"

namespace negglue {

namespace {

struct Style {
  const char* prefix;
  char ch;
  const char* fill;
};

constexpr std::array<Style, 8> kStyles{{
    {"block", '#', "#4a7ab5"},
    {"tape", 't', "#c9a227"},
    {"read", 'r', "#c0504d"},
    {"overlay", 'o', "#8064a2"},
    {"walk", 'w', "#4bacc6"},
    {"extend", 'e', "#9bbb59"},
    {"reduce", 'x', "#f79646"},
    {"fill", 'f', "#7f7f7f"},
}};

const Style* style_of(const Tile& t) {
  for (Side s : kSides) {
    GlueId g = t.glue(s);
    if (g == kNoGlue) continue;
    const std::string& name = glue_name(g);
    if (name.empty() || name.back() != '!') continue;
    for (const auto& st : kStyles)
      if (name.rfind(st.prefix, 0) == 0) return &st;
  }
  return nullptr;
}

struct Box {
  int x0 = INT_MAX, y0 = INT_MAX, x1 = INT_MIN, y1 = INT_MIN;
};

Box bounds(const PositionedAssembly& a) {
  Box b;
  for (const auto& [p, _] : a.tiles()) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

std::string ascii(const PositionedAssembly& a) {
  if (a.empty()) return "";
  Box b = bounds(a);
  std::string out;
  for (int y = b.y0; y <= b.y1; ++y) {
    if (y > b.y0) out += '\n';
    for (int x = b.x0; x <= b.x1; ++x) {
      const Tile* t = a.at({x, y});
      out += t ? tile_char(*t) : '.';
    }
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

std::string svg(const PositionedAssembly& a, bool show_glues) {
  Box b = a.empty() ? Box{0, 0, -1, -1} : bounds(a);
  const int w = b.x1 - b.x0 + 1, h = b.y1 - b.y0 + 1;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\" width=\"" << w * 16
     << "\" height=\"" << h * 16 << "\">\n";
  for (const auto& [p, t] : a.tiles()) {
    const Style* st = style_of(t);
    os << "<rect x=\"" << p.x - b.x0 << "\" y=\"" << p.y - b.y0 << "\" width=\"1\" height=\"1\" fill=\""
       << (st ? st->fill : "#d0d0d0") << "\" stroke=\"#202020\" stroke-width=\"0.05\"/>\n";
  }
  if (show_glues) {
    static constexpr std::array<std::array<double, 2>, 4> kAnchor{{{0.5, 0.2}, {0.8, 0.55}, {0.5, 0.9}, {0.2, 0.55}}};
    for (const auto& [p, t] : a.tiles())
      for (Side s : kSides) {
        GlueId g = t.glue(s);
        if (g == kNoGlue) continue;
        const std::string& name = glue_name(g);
        if (!name.empty() && name.back() == '!') continue;
        const auto& an = kAnchor[static_cast<int>(s)];
        os << "<text x=\"" << p.x - b.x0 + an[0] << "\" y=\"" << p.y - b.y0 + an[1]
           << "\" font-size=\"0.22\" text-anchor=\"middle\">" << escape(name) << "</text>\n";
      }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

char tile_char(const Tile& t) {
  const Style* st = style_of(t);
  return st ? st->ch : '*';
}

std::string render(const PositionedAssembly& a, const RenderOptions& opts) {
  if (opts.frame_every < 1) throw Error("frame_every must be at least 1");
  return opts.format == RenderFormat::Ascii ? ascii(a) : svg(a, opts.show_glues);
}

std::string render(const Assembly& a, const RenderOptions& opts) { return render(a.canonical(), opts); }

}  // namespace negglue
