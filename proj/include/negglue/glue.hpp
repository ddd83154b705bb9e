#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace negglue {

/// Interned glue name. 0 is "no glue".
using GlueId = std::uint32_t;
inline constexpr GlueId kNoGlue = 0;

/// A glue label such as "F", "J3", "h*" or "Vq!". Labels bond only when the
/// full names are equal; strength is looked up through the family (base).
class GlueLabel {
 public:
  explicit GlueLabel(std::string name);

  const std::string& name() const { return name_; }
  /// Leading alphabetic run, plus a trailing '*' when the run is followed by
  /// one ("J3" -> "J", "f*" -> "f*", "h^" -> "h").
  const std::string& base() const { return base_; }
  /// Names ending in '!' are the unique infinite-strength bonds.
  bool infinite() const { return infinite_; }

 private:
  std::string name_;
  std::string base_;
  bool infinite_ = false;
};

std::string glue_base(std::string_view name);

/// Process-wide interning of glue names (thread-safe).
GlueId intern_glue(std::string_view name);
const std::string& glue_name(GlueId id);

inline constexpr int kInfiniteStrength = 10000;

/// Glue family -> integer strength (negative values are repulsive).
class StrengthTable {
 public:
  StrengthTable() = default;

  void set(const std::string& base, int strength) { entries_[base] = strength; }
  std::optional<int> find_base(const std::string& base) const;

  /// Throws UnknownGlue for an unlisted family.
  int lookup(std::string_view label) const;
  int lookup(GlueId id) const;
  bool resolves(std::string_view label) const;

  const std::map<std::string, int>& entries() const { return entries_; }
  int infinite_sentinel() const { return kInfiniteStrength; }
  /// Sum of |strength| over all finite families.
  int total_absolute() const;

 private:
  std::map<std::string, int> entries_;
};

}  // namespace negglue
