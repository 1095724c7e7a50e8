#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qdeform/catalog/entry.hpp"

namespace qdeform {

/// Registry of definitions, keyed by name. Immutable after loading.
class Catalog {
 public:
  /// Loads every *.json file of a directory. Throws SchemaError on a
  /// duplicate name; load errors name the file.
  static Catalog load_directory(const std::filesystem::path& dir);
  void add(CatalogEntry e);

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  /// Throws LookupError.
  const CatalogEntry& get(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Presentation of an entry together with its confluent rewrite system.
  const Presentation& presentation(const std::string& name) const;

 private:
  std::map<std::string, CatalogEntry> entries_;
};

/// Directory given by QDEFORM_CATALOG, else the built-in catalog path.
std::filesystem::path default_catalog_dir();

/// Applies a stored contraction definition.
ContractionSpec contraction_spec(const ContractionDef& def);
/// Contracted entry (matrix and, when the target exists, its pattern data).
CatalogEntry run_contraction(const Catalog& cat, const CatalogEntry& contraction);

/// Hom specification of a stored hom definition at one exponent.
HomSpec hom_spec(const Catalog& cat, const HomDef& def, int N,
                 const std::map<std::string, std::string>& override_map = {});

enum class CheckStatus { Pass, Fail, Error };
std::string to_string(CheckStatus s);

struct CheckOutcome {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  std::vector<CheckLine> details;
  double seconds = 0;
};

struct EntryReport {
  std::string entry;
  std::vector<CheckOutcome> checks;
  bool pass() const;
};

/// Every check name, in report order.
const std::vector<std::string>& check_names();
/// Names of every check that applies to an entry of this kind and shape.
std::vector<std::string> applicable_checks(const CatalogEntry& e);
/// Runs one named check; failures and errors are report content.
CheckOutcome run_check(const Catalog& cat, const CatalogEntry& e, const std::string& check);
/// Runs the given checks, or the entry's claimed flags when `checks` is empty.
EntryReport verify_entry(const Catalog& cat, const CatalogEntry& e, const std::vector<std::string>& checks = {});

}  // namespace qdeform
