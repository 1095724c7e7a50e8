#pragma once

#include <string>

#include "qdeform/rmx/coloured_family.hpp"
#include "qdeform/tensor/sym_matrix.hpp"

namespace qdeform {

/// Singular limit of a similarity transformation.
///
/// The transform may contain `eta_symbol`; it is replaced by `eta_def`
/// before conjugating. `rebind` is applied to the conjugated matrix before
/// the limit `limit_param -> limit_value`; it re-expresses parameters (for
/// example colour coordinates) that must move with the limit.
struct ContractionSpec {
  SymMatrix transform;
  std::string eta_symbol = "eta";
  RatFunc eta_def;
  std::string limit_param;
  mpq_class limit_value;
  Bindings rebind;
  /// Slot groups of the contracted family (coloured contractions only).
  ColourGroup result_first;
  ColourGroup result_second;
};

/// Throws SingularMatrix, or SingularLimit naming the offending entry.
SymMatrix contract_limit(const SymMatrix& r, const ContractionSpec& spec);
ColouredFamily contract_limit(const ColouredFamily& fam, const ContractionSpec& spec);

}  // namespace qdeform
