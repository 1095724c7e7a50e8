#include "qdeform/ncalg/pattern.hpp"

#include <algorithm>
#include <set>

#include "qdeform/errors.hpp"
#include "qdeform/symexpr/param_set.hpp"

namespace qdeform {

PatternCell PatternCell::parse(const std::string& text) {
  PatternCell c;
  if (text == "0") return c;
  if (text == "1") {
    c.kind = Kind::One;
    return c;
  }
  c.kind = Kind::Generator;
  c.base = text;
  if (!c.base.empty() && c.base.back() == '*') {
    c.coloured = true;
    c.base.pop_back();
  }
  if (!is_valid_symbol(c.base)) throw SchemaError("invalid pattern cell '" + text + "'");
  return c;
}

std::string PatternCell::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Generator:
      return coloured ? base + "*" : base;
  }
  return "0";
}

std::string coloured_name(const std::string& base, const ColourGroup& colour) {
  std::string name = base + "_";
  for (const auto& c : colour) name += c;
  return name;
}

TPattern::TPattern(std::vector<std::vector<PatternCell>> cells) : cells_(std::move(cells)) {
  for (const auto& row : cells_)
    if (row.size() != cells_.size()) throw DimensionMismatch("T-pattern must be square");
  std::set<std::string> seen;
  for (const auto& row : cells_)
    for (const auto& c : row)
      if (c.kind == PatternCell::Kind::Generator && !seen.insert(c.to_string()).second)
        throw SchemaError("generator '" + c.base + "' appears twice in the pattern");
}

TPattern TPattern::parse(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<PatternCell>> cells;
  for (const auto& row : rows) {
    std::vector<PatternCell> r;
    for (const auto& s : row) r.push_back(PatternCell::parse(s));
    cells.push_back(std::move(r));
  }
  return TPattern(std::move(cells));
}

bool TPattern::is_coloured() const {
  for (const auto& row : cells_)
    for (const auto& c : row)
      if (c.coloured) return true;
  return false;
}

std::string TPattern::generator(std::size_t i, std::size_t j, const ColourGroup& colour) const {
  const auto& c = cells_[i][j];
  if (c.kind != PatternCell::Kind::Generator) return {};
  if (c.coloured) {
    if (colour.empty()) throw SlotError("coloured pattern cell '" + c.base + "' needs a colour");
    return coloured_name(c.base, colour);
  }
  return c.base;
}

NCPoly TPattern::entry(std::size_t i, std::size_t j, const Alphabet& alphabet, const ColourGroup& colour) const {
  const auto& c = cells_[i][j];
  switch (c.kind) {
    case PatternCell::Kind::Zero:
      return {};
    case PatternCell::Kind::One:
      return NCPoly::scalar(RatFunc(1));
    case PatternCell::Kind::Generator:
      return NCPoly::letter(alphabet.at(generator(i, j, colour)));
  }
  return {};
}

std::vector<std::string> TPattern::generators(const ColourGroup& colour) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) {
      auto g = generator(i, j, colour);
      if (!g.empty() && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  return out;
}

TPattern TPattern::with_zeros(const std::vector<std::string>& killed, const ColourGroup& colour) const {
  TPattern t = *this;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) {
      auto g = generator(i, j, colour);
      if (!g.empty() && std::find(killed.begin(), killed.end(), g) != killed.end()) t.cells_[i][j] = PatternCell{};
    }
  return t;
}

std::vector<std::vector<std::string>> TPattern::to_strings() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : cells_) {
    std::vector<std::string> r;
    for (const auto& c : row) r.push_back(c.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qdeform
