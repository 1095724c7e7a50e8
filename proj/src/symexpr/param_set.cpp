#include "qdeform/symexpr/param_set.hpp"

#include <algorithm>
#include <cctype>

#include "qdeform/errors.hpp"

namespace qdeform {

bool is_valid_symbol(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  std::size_t i = 1;
  while (i < name.size() && (std::isalnum(static_cast<unsigned char>(name[i])) || name[i] == '_')) ++i;
  while (i < name.size() && name[i] == '\'') ++i;
  return i == name.size();
}

ParamSetPtr ParamSet::make(std::vector<std::string> symbols) {
  for (const auto& s : symbols) {
    if (!is_valid_symbol(s)) throw SchemaError("invalid parameter symbol '" + s + "'");
  }
  std::sort(symbols.begin(), symbols.end());
  if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) {
    throw SchemaError("duplicate parameter symbol");
  }
  auto p = std::make_shared<ParamSet>();
  const_cast<ParamSet&>(*p).symbols_ = std::move(symbols);
  return p;
}

const ParamSetPtr& ParamSet::empty() {
  static const ParamSetPtr kEmpty = std::make_shared<const ParamSet>();
  return kEmpty;
}

std::optional<std::size_t> ParamSet::index_of(std::string_view name) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == symbols_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

bool same_params(const ParamSetPtr& a, const ParamSetPtr& b) {
  return a == b || *a == *b;
}

ParamSetPtr union_of(const ParamSetPtr& a, const ParamSetPtr& b) {
  if (same_params(a, b)) return a;
  if (b->is_empty()) return a;
  if (a->is_empty()) return b;
  std::vector<std::string> merged;
  merged.reserve(a->size() + b->size());
  std::set_union(a->symbols().begin(), a->symbols().end(), b->symbols().begin(),
                 b->symbols().end(), std::back_inserter(merged));
  if (merged.size() == a->size()) return a;
  if (merged.size() == b->size()) return b;
  return ParamSet::make(std::move(merged));
}

}  // namespace qdeform
