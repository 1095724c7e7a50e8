#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdeform/ncalg/presentation.hpp"
#include "qdeform/ncalg/rewrite.hpp"

namespace qdeform {

/// The algebra of a presentation with inverses adjoined.
///
/// Invertible generators get letters g^-1 with rewrite rules (see
/// localize). A quasi-central element Q (Q x = chi(x) x Q for every letter
/// x) gets a letter Q^-1 without rules; an expression containing Q^-1 is
/// tested for zero by moving every Q^-1 to the right and clearing the
/// denominator with a power of Q. This is exact because the algebras
/// treated here have no zero divisors.
class LocalAlgebra {
 public:
  /// Throws AxiomFailure when the named element is not quasi-central.
  LocalAlgebra(const RewriteSystem& base, const std::vector<std::string>& invertible,
               std::optional<std::pair<std::string, NCPoly>> quasi_central = std::nullopt);

  /// Localized letters followed by Q^-1 when present.
  const Alphabet& alphabet() const { return alphabet_; }
  const RewriteSystem& system() const { return system_; }
  /// Number of letters that carry rewrite rules (everything but Q^-1).
  std::size_t ruled_letters() const { return system_.alphabet().size(); }
  std::optional<Letter> quasi_inverse_letter() const { return qinv_; }

  /// Normal form after clearing Q^-1 (equals the normal form of x when x
  /// has no Q^-1). Zero iff x is zero.
  NCPoly cleared_normal_form(const NCPoly& x) const;
  bool is_zero(const NCPoly& x) const { return cleared_normal_form(x).is_zero(); }

 private:
  RewriteSystem system_;
  Alphabet alphabet_;
  std::optional<Letter> qinv_;
  NCPoly q_;
  std::vector<RatFunc> chi_;
};

}  // namespace qdeform
