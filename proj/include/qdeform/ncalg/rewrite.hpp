#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/ncalg/ncpoly.hpp"

namespace qdeform {

/// lhs -> rhs with lhs a two-letter word and rhs deg-lex smaller.
struct Rule {
  Word lhs;
  NCPoly rhs;
};

/// Terminating rewrite system on a fixed alphabet. Immutable after
/// construction.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  /// Throws NotOrientable if a rule is not two-letter, repeats an lhs, or
  /// its rhs has a word that is not deg-lex smaller than the lhs.
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* rule_for(Letter x, Letter y) const;
  /// Position of the leftmost reducible pair in w, if any.
  std::optional<std::size_t> first_redex(const Word& w) const;
  bool is_irreducible(const Word& w) const { return !first_redex(w).has_value(); }

  /// Unique irreducible form (for confluent systems).
  NCPoly normal_form(const NCPoly& x) const;
  /// Replaces the redex at `pos` in w by the rule's rhs.
  NCPoly rewrite_at(const Word& w, std::size_t pos) const;

  /// Same rules with coefficients substituted.
  RewriteSystem substituted(const Bindings& b) const;

  /// Rules as relations lhs - rhs.
  std::vector<NCPoly> relations() const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::vector<int> table_;
};

struct CriticalPair {
  Word overlap;
  NCPoly left;   // normal form via the left redex
  NCPoly right;  // normal form via the right redex
};

struct ConfluenceReport {
  bool confluent = true;
  std::size_t overlaps = 0;
  std::vector<CriticalPair> failures;
};

ConfluenceReport check_confluence(const RewriteSystem& rs);

/// Picks one of the redex positions of a word.
using RedexChooser = std::function<std::size_t(const Word&, const std::vector<std::size_t>&)>;
/// Reduces to an irreducible form, rewriting the largest reducible word at
/// the position picked by `choose`.
NCPoly normal_form_by(const RewriteSystem& rs, NCPoly x, const RedexChooser& choose);

/// Orients relations already in reduced echelon form (see
/// independent_relations). Throws NotOrientable naming the relation.
RewriteSystem orient_relations(const Alphabet& alphabet, const std::vector<NCPoly>& relations);

/// Base letters with g^-1 inserted directly after each named generator g.
Alphabet localized_alphabet(const Alphabet& base, const std::vector<std::string>& invertible);

/// Adjoins inverse letters g^-1 for the named generators (see
/// localized_alphabet), with rules g g^-1 -> 1, g^-1 g -> 1 and commutation
/// rules moving g^-1 past smaller letters to the right and past larger
/// letters to the left. Throws NotOrientable when g does not normalize the
/// span of the letters.
RewriteSystem localize(const RewriteSystem& rs, const std::vector<std::string>& invertible);

/// Name of the inverse letter of a generator.
std::string inverse_name(const std::string& generator);

/// Tensor square: letters x@1 (first factor) then x@2 (second factor), each
/// copy with the rules of rs, second-factor letters commuting past
/// first-factor ones.
RewriteSystem tensor_square(const RewriteSystem& rs);
/// Embeds x into the first (factor 1) or second (factor 2) copy.
NCPoly into_factor(const NCPoly& x, std::size_t alphabet_size, int factor);

}  // namespace qdeform
