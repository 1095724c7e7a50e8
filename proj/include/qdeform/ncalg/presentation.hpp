#pragma once

#include <string>
#include <vector>

#include "qdeform/ncalg/ncpoly.hpp"
#include "qdeform/ncalg/pattern.hpp"
#include "qdeform/ncalg/rewrite.hpp"
#include "qdeform/rmx/coloured_family.hpp"
#include "qdeform/tensor/sym_matrix.hpp"

namespace qdeform {

/// Generators in a fixed order, T-pattern and defining relations (= 0).
///
/// A coloured presentation instantiates its pattern at each colour group in
/// `colours`; shared (uncoloured) cells are common to all instances.
struct Presentation {
  std::string name;
  Alphabet alphabet;
  TPattern pattern;
  std::vector<ColourGroup> colours;
  std::vector<NCPoly> relations;
  std::vector<std::string> invertible;

  bool is_coloured() const { return !colours.empty(); }
  ParamSetPtr params() const;
};

/// Reduced row echelon form over the word basis: leading coefficients 1, no
/// leading word occurring in another relation, sorted by leading word.
std::vector<NCPoly> independent_relations(const std::vector<NCPoly>& relations);

/// Entries of R T1 T2 - T2 T1 R with T1 = T (x) 1 at colour c1 and
/// T2 = 1 (x) T at colour c2, reduced to an independent set.
std::vector<NCPoly> rtt_relations(const SymMatrix& r, const TPattern& t, const Alphabet& alphabet,
                                  const ColourGroup& c1 = {}, const ColourGroup& c2 = {});

/// Union of the RTT relations of R^{x,y} for (x, y) over all ordered pairs
/// of the given colours (including x = y), reduced.
std::vector<NCPoly> coloured_rtt_relations(const ColouredFamily& fam, const TPattern& t, const Alphabet& alphabet,
                                           const std::vector<ColourGroup>& colours);

/// Throws NotOrientable, or NotConfluent with the first failing overlap.
RewriteSystem build_rewrite_system(const Presentation& p, bool require_confluent = true);

/// Relations of p involving only `keep`, on the restricted alphabet; rows
/// and columns of the pattern without kept generators are removed. Throws
/// NotASubalgebra when a rule on kept generators produces a dropped one.
Presentation restrict_subalgebra(const Presentation& p, const std::vector<std::string>& keep);

/// Re-expresses x over another alphabet by generator name.
NCPoly rename_letters(const NCPoly& x, const Alphabet& from, const Alphabet& to);

/// True when both relation sets span the same space once b's relations are
/// moved to a's alphabet and substituted with `b_bindings`. On mismatch,
/// `witness` receives the first differing relation.
bool same_relations(const Presentation& a, const Presentation& b, const Bindings& b_bindings = {},
                    std::string* witness = nullptr);

/// Image of x in the commutative polynomial ring (sorted words); zero iff x
/// is a combination of commutators when x is homogeneous.
NCPoly abelianize(const NCPoly& x);

}  // namespace qdeform
