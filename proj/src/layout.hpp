#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "negglue/gadgets.hpp"

namespace negglue::detail {

/// A hand-drawn arrangement of pieces: each character of `rows` names the
/// piece occupying that cell ('.' is empty). Glues are added as contacts.
class Layout {
 public:
  Layout(Vec2 origin, const std::vector<std::string>& rows);

  /// Sets the glue on p's side and, when occupied, the facing side of the
  /// neighbour, so the two bond.
  void bond(Vec2 p, Side s, const std::string& label);
  /// Sets only p's side.
  void face(Vec2 p, Side s, const std::string& label);
  /// Reflects the layout top to bottom (y -> -y).
  void mirror();

  std::vector<Vec2> cells_of(char piece) const;
  /// Tiles of one piece; faces between its own cells get `name!`.
  PositionedAssembly piece(char c, const std::string& name) const;

 private:
  std::map<Vec2, char> owner_;
  std::map<Vec2, std::array<std::string, 4>> glues_;
};

/// Collects gadgets and one trace script from a layout.
class TraceBuilder {
 public:
  TraceBuilder(GadgetLibrary& lib, Layout layout, std::string trace);

  void piece(char c, const std::string& name, GadgetCategory cat, const std::string& variant = "none",
             int special = 0);
  void start(char host, char guest, int expected, const std::string& expr = "");
  void combine(char c, int expected, const std::string& expr = "");
  void detach(const std::string& pieces, int expected, const std::string& expr = "");
  void finish();

 private:
  Placement at(char c) const;

  GadgetLibrary& lib_;
  Layout layout_;
  TraceScript script_;
  std::map<char, Placement> placed_;
};

}  // namespace negglue::detail
