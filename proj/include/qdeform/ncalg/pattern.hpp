#pragma once

#include <string>
#include <vector>

#include "qdeform/ncalg/ncpoly.hpp"
#include "qdeform/rmx/coloured_family.hpp"

namespace qdeform {

/// One cell of a T-matrix pattern.
struct PatternCell {
  enum class Kind { Zero, One, Generator };
  Kind kind = Kind::Zero;
  std::string base;       // generator name for Kind::Generator
  bool coloured = false;  // carries a colour index (e.g. f_s)

  /// Parses "0", "1", "a" or "f*" (coloured).
  static PatternCell parse(const std::string& text);
  std::string to_string() const;
};

/// Name of a coloured generator: base + "_" + colour label.
std::string coloured_name(const std::string& base, const ColourGroup& colour);

/// Structural shape of a square generator matrix.
class TPattern {
 public:
  TPattern() = default;
  /// Throws DimensionMismatch unless square; SchemaError on repeated generators.
  explicit TPattern(std::vector<std::vector<PatternCell>> cells);
  static TPattern parse(const std::vector<std::vector<std::string>>& rows);

  std::size_t n() const { return cells_.size(); }
  const PatternCell& cell(std::size_t i, std::size_t j) const { return cells_[i][j]; }
  bool is_coloured() const;
  /// Generator name in cell (i, j) for the given colour (ignored for
  /// uncoloured cells); empty for constant cells.
  std::string generator(std::size_t i, std::size_t j, const ColourGroup& colour = {}) const;
  /// Cell value as an NCPoly over `alphabet`.
  NCPoly entry(std::size_t i, std::size_t j, const Alphabet& alphabet, const ColourGroup& colour = {}) const;
  /// All generator names in row-major order, first occurrence only.
  std::vector<std::string> generators(const ColourGroup& colour = {}) const;
  /// Copy with the named cells (by generator name under `colour`) set to zero.
  TPattern with_zeros(const std::vector<std::string>& killed, const ColourGroup& colour = {}) const;

  std::vector<std::vector<std::string>> to_strings() const;
  bool operator==(const TPattern& other) const { return to_strings() == other.to_strings(); }

 private:
  std::vector<std::vector<PatternCell>> cells_;
};

}  // namespace qdeform
