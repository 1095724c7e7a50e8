#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdeform/hopf/local_algebra.hpp"
#include "qdeform/ncalg/presentation.hpp"

namespace qdeform {

/// One named check with its verdict and a witness on failure.
struct CheckLine {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct HopfReport {
  std::vector<CheckLine> lines;

  bool pass() const;
  void add(std::string name, bool pass, std::string witness = {});
  /// Throws AxiomFailure naming the first failing line.
  void require() const;
};

/// Matrix coalgebra structure on a presentation, Delta(T) = T (x) T and
/// epsilon(T) = 1, plus an optional antipode.
struct HopfData {
  Presentation presentation;
  RewriteSystem system;
  /// Quasi-central element with an adjoined inverse, e.g. {"D", ad - q bc}.
  std::optional<std::pair<std::string, NCPoly>> quasi_central;
  /// Generator name -> S(generator), over the local alphabet.
  std::map<std::string, NCPoly> antipode;

  LocalAlgebra local_algebra() const;
};

/// T at one colour (uncoloured presentations ignore the colour).
std::vector<std::vector<NCPoly>> t_matrix(const Presentation& p, const ColourGroup& colour = {});

/// Delta as a letter map into the tensor square of `alphabet`, whose
/// letters are the presentation generators possibly followed by inverse
/// letters g^-1 of grouplike generators.
std::vector<std::optional<NCPoly>> coproduct_map(const Presentation& p, const Alphabet& alphabet);
/// epsilon as a letter map into scalars.
std::vector<std::optional<NCPoly>> counit_map(const Presentation& p, const Alphabet& alphabet);

/// Colour index of each letter (-1 for uncoloured letters).
std::vector<int> letter_colours(const Presentation& p, const Alphabet& alphabet);

/// Delta and epsilon respect every relation; coassociativity and the counit
/// law hold on generators. Coloured presentations report relations within
/// one colour and across colours separately.
HopfReport check_bialgebra(const Presentation& p, const RewriteSystem& rs);

struct GrouplikeReport {
  bool grouplike = false;
  bool counit_one = false;
  bool central = false;
  /// First generator that does not commute with x.
  std::string witness;
  std::string coproduct_residual;
};

GrouplikeReport check_grouplike(const Presentation& p, const RewriteSystem& rs, const NCPoly& x);

/// S(T) T = T S(T) = 1 entrywise and S reverses every relation.
HopfReport check_antipode(const HopfData& h);

/// Kills generators of `source` and compares with `target`: relations,
/// pattern, and the coideal property of the killed set. With
/// `compare_relations` false only the pattern-level checks run.
HopfReport check_quotient(const Presentation& source, const std::vector<std::string>& kill,
                          const Presentation& target, bool compare_relations = true);

/// Image power^N * base of a target generator; empty names mean 1.
struct HomImage {
  std::string power;
  std::string base;
};

struct HomSpec {
  Presentation source;
  RewriteSystem source_system;
  Presentation target;
  int N = 1;
  /// Target generator -> image.
  std::map<std::string, HomImage> images;
  /// Parameter map, already specialized to N.
  Bindings bindings;
};

/// Every target relation maps to zero in the localized source algebra, and
/// the map respects Delta and epsilon (per generator, and on products of
/// generators of two different colours).
HopfReport check_hom(const HomSpec& spec);

/// Exponent vectors of a monomial parameter map against the coefficient
/// vectors of a linear one: pairs (multiplicative name, additive name) and
/// matching variables (e.g. r with m, s with k).
CheckLine exponent_correspondence(const Bindings& multiplicative, const Bindings& additive,
                                  const std::vector<std::pair<std::string, std::string>>& params,
                                  const std::vector<std::pair<std::string, std::string>>& variables);

}  // namespace qdeform
