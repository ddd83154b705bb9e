#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace negglue {

/// Integer grid coordinate. y grows downward (row 0 is the top row), so the
/// natural ordering is row-major: by y, then by x.
struct Vec2 {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr bool operator==(Vec2, Vec2) = default;
  friend constexpr std::strong_ordering operator<=>(Vec2 a, Vec2 b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(std::int32_t k) const { return {x * k, y * k}; }
};

enum class Side : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Side, 4> kSides{Side::North, Side::East, Side::South, Side::West};

constexpr Vec2 step(Side s) {
  switch (s) {
    case Side::North: return {0, -1};
    case Side::East: return {1, 0};
    case Side::South: return {0, 1};
    case Side::West: return {-1, 0};
  }
  return {0, 0};
}

constexpr Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

/// Quarter turns clockwise (on screen, with y down).
constexpr Side rotate_cw(Side s, int quarter_turns) {
  return static_cast<Side>(((static_cast<int>(s) + quarter_turns) % 4 + 4) % 4);
}

constexpr Vec2 rotate_cw(Vec2 v, int quarter_turns) {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 1: return {-v.y, v.x};
    case 2: return {-v.x, -v.y};
    case 3: return {v.y, -v.x};
    default: return v;
  }
}

constexpr char side_char(Side s) { return "NESW"[static_cast<int>(s)]; }

struct Vec2Hash {
  std::size_t operator()(Vec2 v) const noexcept {
    auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x));
    auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.y));
    return std::hash<std::uint64_t>{}((ux << 32) ^ uy);
  }
};

}  // namespace negglue
