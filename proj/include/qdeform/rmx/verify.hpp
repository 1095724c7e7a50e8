#pragma once

#include <array>
#include <optional>
#include <utility>

#include "qdeform/rmx/coloured_family.hpp"
#include "qdeform/tensor/sym_matrix.hpp"

namespace qdeform {

struct CheckResult {
  bool pass = false;
  std::optional<EntryWitness> witness;
};

/// R12 R13 R23 - R23 R13 R12.
SymMatrix qybe_residual(const SymMatrix& r);
/// R12^{c1,c2} R13^{c1,c3} R23^{c2,c3} - R23^{c2,c3} R13^{c1,c3} R12^{c1,c2}.
SymMatrix cqybe_residual(const ColouredFamily& fam, const std::array<ColourGroup, 3>& colours);

/// r (P r P) == I; the witness is the first nonzero entry of r P r P - I.
CheckResult triangular_check(const SymMatrix& r);
/// R^{c1,c2} P R^{c2,c1} P == I.
CheckResult colour_triangular_check(const ColouredFamily& fam, const std::pair<ColourGroup, ColourGroup>& colours);

/// (P r - alpha)(P r - beta).
SymMatrix hecke_residual(const SymMatrix& r, const RatFunc& alpha, const RatFunc& beta);

/// (t^-1 (x) t^-1) r (t (x) t).
SymMatrix conjugate_r(const SymMatrix& r, const SymMatrix& t);

}  // namespace qdeform
