#pragma once

#include <string>
#include <utility>
#include <vector>

#include "negglue/glue.hpp"

namespace negglue {

/// The published strength table, family by family.
StrengthTable table1_strengths();

/// table1_strengths() plus the families that only appear in worked sums
/// (n, I, h*, l*, r*).
StrengthTable default_strengths();

enum class Relation { AtLeastTau, BelowTau };

struct InequalityRow {
  std::string process;
  std::vector<std::string> lhs;  // glue labels, summed
  Relation relation = Relation::AtLeastTau;

  std::string text() const;
};

/// Every inequality the gadgets rely on, grouped by process.
const std::vector<InequalityRow>& inequality_rows();

struct InequalityResult {
  InequalityRow row;
  int value = 0;
  bool holds = false;
};

struct InequalityReport {
  std::vector<InequalityResult> rows;
  /// Families whose strength is not below tau.
  std::vector<std::pair<std::string, int>> strong_glues;
  /// Labels in the rows that the table does not resolve.
  std::vector<std::string> unresolved;
  bool pass = false;
};

InequalityReport verify_inequalities(const StrengthTable& s, int tau);

}  // namespace negglue
