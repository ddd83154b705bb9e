#include "negglue/glue.hpp"

#include <cctype>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "negglue/errors.hpp"

namespace negglue {

std::string glue_base(std::string_view name) {
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
  std::string base(name.substr(0, i));
  if (i < name.size() && name[i] == '*') base.push_back('*');
  return base;
}

GlueLabel::GlueLabel(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw Error("glue label must be non-empty");
  infinite_ = name_.back() == '!';
  base_ = glue_base(name_);
}

namespace {

struct GluePool {
  std::mutex mu;
  std::unordered_map<std::string, GlueId> ids;
  std::deque<std::string> names{""};
};

GluePool& pool() {
  static GluePool p;
  return p;
}

}  // namespace

GlueId intern_glue(std::string_view name) {
  if (name.empty() || name == "-") return kNoGlue;
  auto& p = pool();
  std::lock_guard lock(p.mu);
  auto [it, inserted] = p.ids.try_emplace(std::string(name), static_cast<GlueId>(p.names.size()));
  if (inserted) p.names.emplace_back(name);
  return it->second;
}

const std::string& glue_name(GlueId id) {
  auto& p = pool();
  std::lock_guard lock(p.mu);
  return p.names.at(id);
}

std::optional<int> StrengthTable::find_base(const std::string& base) const {
  auto it = entries_.find(base);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

int StrengthTable::lookup(std::string_view label) const {
  if (!label.empty() && label.back() == '!') return kInfiniteStrength;
  auto v = find_base(glue_base(label));
  if (!v) throw UnknownGlue(std::string(label));
  return *v;
}

int StrengthTable::lookup(GlueId id) const {
  if (id == kNoGlue) return 0;
  return lookup(glue_name(id));
}

bool StrengthTable::resolves(std::string_view label) const {
  if (!label.empty() && label.back() == '!') return true;
  return find_base(glue_base(label)).has_value();
}

int StrengthTable::total_absolute() const {
  int total = 0;
  for (const auto& [_, v] : entries_) total += std::abs(v);
  return total;
}

}  // namespace negglue
