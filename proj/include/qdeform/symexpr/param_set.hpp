#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdeform {

class ParamSet;
using ParamSetPtr = std::shared_ptr<const ParamSet>;

/// Ordered set of parameter symbols.
///
/// Symbols are kept sorted by name, so the variable order (and with it the
/// lex monomial order used for canonical forms) never depends on the order
/// in which expressions were built. Merging two sets therefore preserves the
/// relative order of the variables of each.
class ParamSet {
 public:
  ParamSet() = default;

  /// Throws SchemaError on duplicate or malformed symbols.
  static ParamSetPtr make(std::vector<std::string> symbols);
  static const ParamSetPtr& empty();

  std::size_t size() const { return symbols_.size(); }
  bool is_empty() const { return symbols_.empty(); }
  const std::string& symbol(std::size_t i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  bool operator==(const ParamSet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

bool same_params(const ParamSetPtr& a, const ParamSetPtr& b);
ParamSetPtr union_of(const ParamSetPtr& a, const ParamSetPtr& b);

/// True for names accepted by the expression grammar: [A-Za-z_][A-Za-z0-9_]*'*
bool is_valid_symbol(std::string_view name);

}  // namespace qdeform
