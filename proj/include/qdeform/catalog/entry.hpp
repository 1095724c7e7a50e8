#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdeform/hopf/hopf.hpp"
#include "qdeform/ncalg/presentation.hpp"
#include "qdeform/rmx/coloured_family.hpp"
#include "qdeform/rmx/contraction.hpp"
#include "qdeform/tensor/sym_matrix.hpp"

namespace qdeform {

using Json = nlohmann::ordered_json;

enum class EntryKind { RMatrix, ColouredFamily, Presentation, Contraction, Hom };

std::string to_string(EntryKind k);
/// Throws SchemaError.
EntryKind parse_entry_kind(const std::string& s);

struct Provenance {
  /// literature-derived | contraction-output | reconstructed-by-oracle
  std::string source;
  std::string note;
};

struct GrouplikeClaim {
  std::string element;
  bool grouplike = true;
  bool central = true;
};

struct QuotientClaim {
  std::string source;
  std::vector<std::string> kill;
  /// Compare T-patterns and the coideal property only.
  bool pattern_only = false;
};

struct SubalgebraClaim {
  std::vector<std::string> keep;
  std::string target;
  /// Target parameter -> expression in this entry's parameters.
  std::map<std::string, std::string> target_bindings;
};

struct ContractionDef {
  std::string source;
  std::string target;
  std::size_t transform_dim = 0;
  std::vector<std::string> transform;
  std::string eta_symbol = "eta";
  std::string eta;
  std::string limit_param;
  std::string limit_value;
  std::map<std::string, std::string> rebind;
  ColourGroup result_first;
  ColourGroup result_second;
};

struct HomControl {
  std::string name;
  std::map<std::string, std::string> override_map;
};

/// The hom on the other side of the exponential correspondence. `params`
/// and `variables` pair multiplicative names with additive ones.
struct ExponentTwin {
  std::string spec;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> variables;
};

struct HomDef {
  std::string source;
  std::string target;
  std::map<std::string, HomImage> images;
  /// Parameter -> expression; the integer constant N may occur.
  std::map<std::string, std::string> param_map;
  std::vector<int> exponents{1, 2, 3, -1};
  std::vector<HomControl> controls;
  std::optional<ExponentTwin> twin;

  /// param_map specialized to N (and an optional control override).
  Bindings bindings(const ParamSetPtr& params, int N,
                    const std::map<std::string, std::string>& override_map = {}) const;
};

/// One definition document of the catalog.
struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::RMatrix;
  std::vector<std::string> params;
  std::optional<std::pair<ColourGroup, ColourGroup>> colour_slots;
  std::vector<ColourGroup> colours;
  std::size_t dim = 0;
  SymMatrix matrix;
  std::optional<Presentation> presentation;
  std::vector<std::string> flags;
  Provenance provenance;

  std::optional<std::pair<RatFunc, RatFunc>> hecke;
  Bindings classical_point;
  std::optional<std::pair<std::string, NCPoly>> quasi_central;
  std::map<std::string, NCPoly> antipode;
  std::vector<GrouplikeClaim> grouplike;
  std::optional<QuotientClaim> quotient;
  std::vector<SubalgebraClaim> subalgebras;
  std::optional<ContractionDef> contraction;
  std::optional<HomDef> hom;

  ParamSetPtr param_set() const;
  bool has_flag(const std::string& f) const;
  ColouredFamily family() const;
  /// Alphabet of the antipode: localized generators, then the quasi-central inverse.
  Alphabet local_alphabet() const;
};

/// Parses and validates one document. Throws ParseError, SchemaError or
/// DimensionMismatch. Relations are derived from the R-matrix when a
/// pattern is given without them.
CatalogEntry load_definition(const Json& doc);
/// Canonical document; load_definition(to_json(e)) reproduces e.
Json to_json(const CatalogEntry& e);

/// Canonical text of a document (two-space indent, trailing newline).
std::string dump_definition(const Json& doc);

}  // namespace qdeform
