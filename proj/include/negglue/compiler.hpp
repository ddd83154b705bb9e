#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "negglue/assembly.hpp"
#include "negglue/gadgets.hpp"
#include "negglue/reaction.hpp"

namespace negglue {

inline constexpr int kTargetScale = 24;
/// Side of the block laid down per outline cell (outline is at scale 2).
inline constexpr int kBlockSide = kTargetScale / 2;
/// Largest scripted detachment in the shipped library, frozen.
inline constexpr std::size_t kFrozenGarbageBound = 16;

/// Reads '#' as a cell; '.' and ' ' are empty. Throws EmptyShape or
/// DisconnectedShape.
Shape parse_shape(const std::string& text);
std::string shape_text(const Shape& sh);

/// Row-major minimal cell (top row, then leftmost).
Vec2 first_cell(const Shape& sh);

struct SpanningTree {
  std::vector<Vec2> nodes;                   // DFS discovery order
  std::vector<std::pair<Vec2, Vec2>> edges;  // (parent, child)
};

/// Depth-first tree from first_cell, neighbours tried N, E, S, W.
SpanningTree spanning_tree(const Shape& sh);

enum class Move : char { F = 'F', L = 'L', R = 'R' };

struct InstructionSequence {
  std::vector<Move> moves;
  Vec2 start;                  // scale-2 outline cell
  Side heading = Side::East;   // heading before the first move

  std::string text() const;
};

/// Scale-2 tour around the spanning tree, opened at its first cell.
InstructionSequence tree_outline_instructions(const Shape& sh);
/// Cells visited by the sequence (moves + 1 of them).
std::vector<Vec2> walk_cells(const InstructionSequence& seq);
/// Heading after each move.
std::vector<Side> walk_headings(const InstructionSequence& seq);

/// Two-bit reader code of a tape unit: F=00, L=01, R=10, end marker=11.
std::pair<int, int> move_bits(Move m);

struct InstructionTape {
  PositionedAssembly assembly;
  std::size_t sections = 0;
  /// Section i occupies unit i+1; unit 0 is the end marker, the last unit is the cap.
  std::vector<Vec2> unit_origins;
};

inline constexpr int kUnitWidth = 3;
inline constexpr int kUnitTiles = 6;
inline constexpr int kCapTiles = 2;

/// One 3x2 unit per instruction plus the end marker and cap. Glues must
/// resolve in lib's strength table.
InstructionTape instructions_to_tape(const InstructionSequence& seq, const GadgetLibrary& lib);

struct BaseConversionPlan {
  long long k = 0;
  long long b = 0;
  long long d = 0;
  long long tape_tiles = 0;
  long long tm_tiles = 0;
};

inline constexpr long long kDigitTiles = 2;
inline constexpr long long kTmTilesPerSymbol = 3;
inline constexpr long long kTmFixedTiles = 40;
inline constexpr long long kAccountingConstant = 8;

BaseConversionPlan base_conversion_plan(long long k);
long long system_bit_encoding_size(long long tile_count, int tau);

struct GarbagePolicy {
  std::size_t c_garbage = kFrozenGarbageBound;
};

/// Largest piece detached by any trace of the library.
std::size_t measured_garbage_bound(const GadgetLibrary& lib);

/// Placement of a messenger (reader + tape unit) inside a block, in
/// section-local coordinates, for each exit side.
Vec2 dock_offset(Side exit);
/// Cells of a messenger relative to its section origin.
const std::vector<Vec2>& messenger_cells();
/// Cells of a reader relative to the section origin it reads.
const std::vector<Vec2>& reader_cells();

struct CompiledSystem {
  Shape input;
  Shape target;
  SpanningTree tree;
  InstructionSequence seq;
  std::vector<Vec2> path;    // scale-2 cells, block j sits at path[j] * kBlockSide
  std::vector<Side> exits;   // exits[i]: side of block i that block i+1 attaches to
  GadgetLibrary system;      // readers, overlay initiator and blocks
  InstructionTape tape;
  GarbagePolicy policy;

  SystemConfig config() const;
  std::string reader_for(std::size_t section) const;
  std::string block_name(std::size_t j) const;
  Vec2 block_origin(std::size_t j) const;
  std::size_t tile_type_count() const;
  std::size_t tape_tile_count() const { return tape.assembly.size(); }
};

CompiledSystem compile(const Shape& sh, const GadgetLibrary& lib, int tau = 10);

/// Gadget file with the system gadgets plus [tape] and [meta] blocks.
std::string serialize_compiled(const CompiledSystem& cs);
/// Throws LoadError on malformed input.
CompiledSystem parse_compiled(const std::string& text, const std::string& where);
CompiledSystem load_compiled(const std::string& path);

/// Bits of a bounding-box bitmap description of the shape.
long long description_bits(const Shape& sh);

}  // namespace negglue
