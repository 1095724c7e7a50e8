#pragma once

#include <string>
#include <vector>

#include "qdeform/tensor/sym_matrix.hpp"

namespace qdeform {

/// A group of colour symbols, e.g. {"s"} or {"w"}; one per colour slot.
using ColourGroup = std::vector<std::string>;

/// R-matrix depending on two colours through designated slot symbols.
///
/// `first` and `second` name the symbols standing for the first and second
/// colour. Instantiation substitutes them simultaneously by the symbols of
/// concrete colour groups.
class ColouredFamily {
 public:
  ColouredFamily() = default;
  /// Throws SlotError if the two slot groups differ in size, overlap or are empty.
  ColouredFamily(SymMatrix entries, ColourGroup first, ColourGroup second);

  const SymMatrix& entries() const { return entries_; }
  const ColourGroup& first() const { return first_; }
  const ColourGroup& second() const { return second_; }

  /// R^{c1,c2}. Throws SlotError when a group has the wrong size.
  SymMatrix instantiate(const ColourGroup& c1, const ColourGroup& c2) const;
  /// True when no entry depends on a slot symbol.
  bool is_colour_constant() const;

 private:
  SymMatrix entries_;
  ColourGroup first_;
  ColourGroup second_;
};

}  // namespace qdeform
