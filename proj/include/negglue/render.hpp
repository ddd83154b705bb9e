#pragma once

#include <string>

#include "negglue/assembly.hpp"

namespace negglue {

enum class RenderFormat { Ascii, Svg };

struct RenderOptions {
  RenderFormat format = RenderFormat::Ascii;
  bool show_glues = false;
  std::size_t frame_every = 1;  // >= 1
};

/// Character for a tile, chosen by the prefix of its internal bond name:
/// block '#', tape 't', read 'r', overlay 'o', walk 'w', extend 'e',
/// reduce 'x', fill 'f', anything else '*'.
char tile_char(const Tile& t);

/// ASCII: one row per line, '.' for empty cells, no trailing newline.
/// SVG: one unit square per tile in a viewBox measured in tiles.
std::string render(const PositionedAssembly& a, const RenderOptions& opts = {});
std::string render(const Assembly& a, const RenderOptions& opts = {});

}  // namespace negglue
