#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negglue/assembly.hpp"
#include "negglue/glue.hpp"
#include "negglue/reaction.hpp"

namespace negglue {

enum class GadgetCategory {
  OverlayInitiator,
  OverlayHelper,
  Read,
  ReadHelper,
  InfoBlock,
  Walker,
  WalkerHelper,
  Extender,
  ExtenderHelper,
  Reducer,
  ReducerHelper,
  FillInitiator,
  FillBlock,
  TapeSection,
  Buffer,
};

inline constexpr int kGadgetCategoryCount = 15;

std::string category_name(GadgetCategory c);
std::optional<GadgetCategory> parse_category(const std::string& s);

/// A pre-built assembly. The body is stored with its minimal cell at the
/// origin; scripts place it by naming a translation.
struct Gadget {
  std::string name;
  GadgetCategory category = GadgetCategory::Buffer;
  std::string variant = "none";  // F, L, R or none
  int special = 0;               // 0 for the standard form
  PositionedAssembly body;
};

/// A gadget (or the running assembly "$") placed at an offset.
struct Placement {
  std::string gadget;
  Vec2 offset;
};

struct TraceStep {
  enum class Kind { Combine, Break };
  Kind kind = Kind::Combine;
  /// Combine: the running assembly ("$") or a placement. Break: "$".
  std::string lhs;
  /// Combine: one placement. Break: the leaving piece as placements.
  std::vector<Placement> rhs;
  int expected = 0;
  /// Glue sum as written, e.g. "n+T+F". May be empty.
  std::string expression;
};

struct TraceScript {
  std::string name;
  std::vector<TraceStep> steps;
};

struct GadgetLibrary {
  int tau = 10;
  StrengthTable strengths;
  std::vector<Gadget> gadgets;
  std::vector<TraceScript> traces;

  const Gadget* find(const std::string& name) const;
  const TraceScript* find_trace(const std::string& name) const;
};

/// Parses placement tokens "name@x,y" (offset defaults to 0,0).
Placement parse_placement(const std::string& token);
std::string placement_text(const Placement& p);

struct LoadOptions {
  /// Require at least one gadget of every category.
  bool require_all_categories = true;
  /// Check every gadget body for tau-stability.
  bool check_stability = true;
};

GadgetLibrary parse_gadgets(const std::string& text, const std::string& where, const LoadOptions& opts = {});
GadgetLibrary load_gadgets(const std::string& path, const LoadOptions& opts = {});
std::string serialize_gadgets(const GadgetLibrary& lib);

/// The built-in library, assembled from hand-drawn trace layouts.
GadgetLibrary build_default_library();

/// Scripts of the built-in library keyed by name.
std::map<std::string, TraceScript> trace_catalog();

/// Shipped library path (data/gadgets.txt in the source tree).
std::string default_gadget_path();

struct ReactionEvent {
  TraceStep::Kind kind = TraceStep::Kind::Combine;
  std::string lhs;
  std::string rhs;
  int strength = 0;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  std::size_t detached = 0;  // tiles in the leaving piece for breaks
  std::string expression;

  std::string line() const;
};

SystemConfig library_config(const GadgetLibrary& lib);

/// Executes each step, checking the strength against the script. Throws
/// TraceDivergence at the first mismatch or inapplicable step.
std::vector<ReactionEvent> replay(const TraceScript& script, const GadgetLibrary& lib);

/// Running assembly after the full script.
PositionedAssembly replay_result(const TraceScript& script, const GadgetLibrary& lib);

}  // namespace negglue
