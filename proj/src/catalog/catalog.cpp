#include "qdeform/catalog/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "qdeform/errors.hpp"
#include "qdeform/rmx/verify.hpp"
#include "qdeform/symexpr/parse.hpp"

#ifndef QDEFORM_CATALOG_DIR
#define QDEFORM_CATALOG_DIR "catalog"
#endif

namespace qdeform {

Catalog Catalog::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw LookupError("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  Catalog cat;
  for (const auto& f : files) {
    std::ifstream in(f);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(f.filename().string() + ": " + e.what());
    }
    try {
      cat.add(load_definition(doc));
    } catch (const Error& e) {
      throw SchemaError(f.filename().string() + ": " + e.what());
    }
  }
  return cat;
}

void Catalog::add(CatalogEntry e) {
  std::string name = e.name;
  if (!entries_.emplace(name, std::move(e)).second) throw SchemaError("duplicate catalog entry '" + name + "'");
}

const CatalogEntry& Catalog::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw LookupError("no catalog entry named '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

const Presentation& Catalog::presentation(const std::string& name) const {
  const CatalogEntry& e = get(name);
  if (!e.presentation) throw LookupError("catalog entry '" + name + "' has no presentation");
  return *e.presentation;
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("QDEFORM_CATALOG"); env && *env) return env;
  return QDEFORM_CATALOG_DIR;
}

ContractionSpec contraction_spec(const ContractionDef& def) {
  ContractionSpec s;
  std::vector<RatFunc> t;
  for (const auto& x : def.transform) t.push_back(parse_ratfunc(x));
  s.transform = SymMatrix::from_entries(def.transform_dim, def.transform_dim, std::move(t));
  s.eta_symbol = def.eta_symbol;
  s.eta_def = parse_ratfunc(def.eta);
  s.limit_param = def.limit_param;
  s.limit_value = parse_ratfunc(def.limit_value).constant_value();
  for (const auto& [k, v] : def.rebind) s.rebind[k] = parse_ratfunc(v);
  s.result_first = def.result_first;
  s.result_second = def.result_second;
  return s;
}

CatalogEntry run_contraction(const Catalog& cat, const CatalogEntry& contraction) {
  if (!contraction.contraction) throw SchemaError(contraction.name + " is not a contraction");
  const ContractionDef& def = *contraction.contraction;
  const CatalogEntry& src = cat.get(def.source);
  ContractionSpec spec = contraction_spec(def);

  CatalogEntry out;
  if (cat.contains(def.target)) {
    out = cat.get(def.target);
  } else {
    out.name = def.target;
    out.kind = src.kind;
    out.colours = {};
  }
  out.provenance = {"contraction-output", "limit of " + contraction.name + " applied to " + src.name};
  if (src.kind == EntryKind::ColouredFamily) {
    if (def.result_first.empty()) throw SchemaError(contraction.name + ": coloured contraction needs result_slots");
    out.kind = EntryKind::ColouredFamily;
    out.matrix = contract_limit(src.family(), spec).entries();
    out.colour_slots = {def.result_first, def.result_second};
  } else {
    out.kind = EntryKind::RMatrix;
    out.matrix = contract_limit(src.matrix, spec);
  }
  out.dim = out.matrix.rows();
  if (!cat.contains(def.target)) {
    std::vector<std::string> names;
    for (const auto& e : out.matrix.entries())
      for (const auto& s : e.free_symbols()) names.push_back(s);
    if (out.colour_slots) {
      names.insert(names.end(), out.colour_slots->first.begin(), out.colour_slots->first.end());
      names.insert(names.end(), out.colour_slots->second.begin(), out.colour_slots->second.end());
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    out.params = names;
  } else if (out.presentation) {
    Presentation& p = *out.presentation;
    p.relations = out.kind == EntryKind::ColouredFamily
                      ? coloured_rtt_relations(out.family(), p.pattern, p.alphabet, p.colours)
                      : rtt_relations(out.matrix, p.pattern, p.alphabet);
  }
  return out;
}

HomSpec hom_spec(const Catalog& cat, const HomDef& def, int N, const std::map<std::string, std::string>& override_map) {
  HomSpec s;
  s.source = cat.presentation(def.source);
  s.source_system = build_rewrite_system(s.source);
  s.target = cat.presentation(def.target);
  s.N = N;
  s.images = def.images;
  s.bindings = def.bindings(nullptr, N, override_map);
  return s;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Error:
      return "error";
  }
  return "error";
}

bool EntryReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.status == CheckStatus::Pass; });
}

namespace {

std::string cell_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string witness_text(const std::optional<EntryWitness>& w) {
  if (!w) return "";
  return "entry " + cell_text(w->row, w->col) + " = " + w->value.to_string();
}

void zero_matrix(CheckOutcome& out, const SymMatrix& m) {
  auto w = m.first_nonzero();
  out.status = w ? CheckStatus::Fail : CheckStatus::Pass;
  out.witness = witness_text(w);
}

void from_lines(CheckOutcome& out, std::vector<CheckLine> lines) {
  out.status = CheckStatus::Pass;
  for (const auto& l : lines) {
    if (!l.pass && out.status == CheckStatus::Pass) {
      out.status = CheckStatus::Fail;
      out.witness = l.name + (l.witness.empty() ? "" : ": " + l.witness);
    }
  }
  out.details = std::move(lines);
}

const Presentation& need_presentation(const CatalogEntry& e) {
  if (!e.presentation) throw SchemaError(e.name + " has no presentation");
  return *e.presentation;
}

std::array<ColourGroup, 3> colour_triple(const CatalogEntry& e) {
  if (e.colours.size() < 3) throw SlotError(e.name + " needs three colour groups");
  return {e.colours[0], e.colours[1], e.colours[2]};
}

std::string word_text(const Word& w, const Alphabet& a) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + a.name(w[i]);
  return s;
}

void check_relations(CheckOutcome& out, const CatalogEntry& e) {
  const Presentation& p = need_presentation(e);
  std::vector<NCPoly> fresh = e.kind == EntryKind::ColouredFamily
                                  ? coloured_rtt_relations(e.family(), p.pattern, p.alphabet, p.colours)
                                  : rtt_relations(e.matrix, p.pattern, p.alphabet);
  auto stored = independent_relations(p.relations);
  out.status = CheckStatus::Pass;
  for (std::size_t i = 0; i < std::max(fresh.size(), stored.size()); ++i) {
    if (i < fresh.size() && i < stored.size() && fresh[i] == stored[i]) continue;
    out.status = CheckStatus::Fail;
    out.witness = i < fresh.size() ? "derived " + fresh[i].to_string(p.alphabet)
                                   : "stored " + stored[i].to_string(p.alphabet);
    break;
  }
  out.details.push_back({"independent relations", true, std::to_string(fresh.size())});
}

void check_confluent(CheckOutcome& out, const CatalogEntry& e) {
  const Presentation& p = need_presentation(e);
  RewriteSystem rs = build_rewrite_system(p, false);
  auto report = check_confluence(rs);
  out.status = report.confluent ? CheckStatus::Pass : CheckStatus::Fail;
  if (!report.confluent) {
    const auto& f = report.failures.front();
    out.witness = "overlap " + word_text(f.overlap, p.alphabet) + ": " + f.left.to_string(p.alphabet) + " vs " +
                  f.right.to_string(p.alphabet);
  }
  out.details.push_back({"rules", true, std::to_string(rs.rules().size())});
  out.details.push_back({"overlaps", true, std::to_string(report.overlaps)});
}

void check_normal_forms(CheckOutcome& out, const CatalogEntry& e) {
  const Presentation& p = need_presentation(e);
  RewriteSystem rs = build_rewrite_system(p);
  std::mt19937 rng(20240607);
  const std::size_t n = p.alphabet.size();
  std::uniform_int_distribution<std::size_t> len(2, 4), letter(0, n - 1);
  RedexChooser leftmost = [](const Word&, const std::vector<std::size_t>& r) { return r.front(); };
  RedexChooser rightmost = [](const Word&, const std::vector<std::size_t>& r) { return r.back(); };
  std::mt19937 pick(99);
  RedexChooser random = [&pick](const Word&, const std::vector<std::size_t>& r) {
    return r[std::uniform_int_distribution<std::size_t>(0, r.size() - 1)(pick)];
  };
  out.status = CheckStatus::Pass;
  for (int k = 0; k < 100; ++k) {
    Word w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    NCPoly x = NCPoly::word(w);
    NCPoly a = rs.normal_form(x);
    for (const auto* c : {&leftmost, &rightmost, &random}) {
      if (!(normal_form_by(rs, x, *c) == a)) {
        out.status = CheckStatus::Fail;
        out.witness = word_text(w, p.alphabet);
        return;
      }
    }
  }
  out.details.push_back({"random words", true, "100"});
}

void check_classical(CheckOutcome& out, const CatalogEntry& e) {
  const Presentation& p = need_presentation(e);
  if (e.classical_point.empty()) throw SchemaError(e.name + " has no classical point");
  out.status = CheckStatus::Pass;
  for (const auto& rel : p.relations) {
    NCPoly c = abelianize(rel.substitute(e.classical_point));
    if (!c.is_zero()) {
      out.status = CheckStatus::Fail;
      out.witness = rel.to_string(p.alphabet);
      return;
    }
  }
}

void check_antipode_entry(CheckOutcome& out, const CatalogEntry& e) {
  HopfData h;
  h.presentation = need_presentation(e);
  h.system = build_rewrite_system(h.presentation);
  h.quasi_central = e.quasi_central;
  h.antipode = e.antipode;
  from_lines(out, check_antipode(h).lines);
}

void check_grouplike_entry(CheckOutcome& out, const CatalogEntry& e) {
  const Presentation& p = need_presentation(e);
  RewriteSystem rs = build_rewrite_system(p);
  std::vector<CheckLine> lines;
  for (const auto& c : e.grouplike) {
    GrouplikeReport g = check_grouplike(p, rs, parse_ncpoly(c.element, p.alphabet));
    bool gl = g.grouplike && g.counit_one;
    std::string got = std::string(gl ? "grouplike" : "not grouplike") + ", " +
                      (g.central ? "central" : "not central (witness " + g.witness + ")");
    lines.push_back({c.element, gl == c.grouplike && g.central == c.central, got});
  }
  from_lines(out, std::move(lines));
}

void check_subalgebra(CheckOutcome& out, const Catalog& cat, const CatalogEntry& e) {
  const Presentation& p = need_presentation(e);
  std::vector<CheckLine> lines;
  for (const auto& c : e.subalgebras) {
    Presentation sub = restrict_subalgebra(p, c.keep);
    const Presentation& target = cat.presentation(c.target);
    Bindings b;
    for (const auto& [k, v] : c.target_bindings) b[k] = parse_ratfunc(v);
    std::string w;
    bool same = same_relations(sub, target, b, &w);
    if (same && !(sub.pattern == target.pattern)) {
      same = false;
      w = "patterns differ";
    }
    std::string keep;
    for (const auto& g : c.keep) keep += (keep.empty() ? "" : ",") + g;
    lines.push_back({"{" + keep + "} = " + c.target, same, w});
  }
  from_lines(out, std::move(lines));
}

void check_quotient_entry(CheckOutcome& out, const Catalog& cat, const CatalogEntry& e) {
  if (!e.quotient) throw SchemaError(e.name + " claims no quotient");
  const Presentation& src = cat.presentation(e.quotient->source);
  from_lines(out, check_quotient(src, e.quotient->kill, need_presentation(e), !e.quotient->pattern_only).lines);
}

void check_contraction(CheckOutcome& out, const Catalog& cat, const CatalogEntry& e) {
  CatalogEntry got = run_contraction(cat, e);
  const CatalogEntry& frozen = cat.get(e.contraction->target);
  out.status = CheckStatus::Pass;
  if (got.matrix.rows() != frozen.matrix.rows()) {
    out.status = CheckStatus::Fail;
    out.witness = "dimension differs";
    return;
  }
  const std::size_t d = got.matrix.rows();
  for (std::size_t i = 0; i < d && out.status == CheckStatus::Pass; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const RatFunc& a = got.matrix(i, j);
      const RatFunc& b = frozen.matrix(i, j);
      if (!(a == b) || a.to_string() != b.to_string()) {
        out.status = CheckStatus::Fail;
        out.witness = "entry " + cell_text(i, j) + ": contracted " + a.to_string() + ", frozen " + b.to_string();
        break;
      }
    }
  if (got.colour_slots != frozen.colour_slots) {
    out.status = CheckStatus::Fail;
    out.witness = "colour slots differ";
  }
}

void check_hom_entry(CheckOutcome& out, const Catalog& cat, const CatalogEntry& e) {
  const HomDef& def = *e.hom;
  std::vector<CheckLine> lines;
  for (int N : def.exponents) {
    HopfReport r = check_hom(hom_spec(cat, def, N));
    std::string prefix = "N=" + std::to_string(N) + ": ";
    for (const auto& l : r.lines) lines.push_back({prefix + l.name, l.pass, l.pass ? "" : l.witness});
  }
  for (const auto& c : def.controls) {
    for (int N : def.exponents) {
      HopfReport r = check_hom(hom_spec(cat, def, N, c.override_map));
      bool relations_fail = false;
      std::string w;
      for (const auto& l : r.lines) {
        if (!l.pass) {
          relations_fail = true;
          w = l.name;
          break;
        }
      }
      lines.push_back({"control " + c.name + " N=" + std::to_string(N) + " is rejected", relations_fail,
                       relations_fail ? "fails on " + w : "unexpectedly passes"});
    }
  }
  if (def.twin) {
    const CatalogEntry& twin = cat.get(def.twin->spec);
    if (!twin.hom) throw SchemaError(def.twin->spec + " is not a hom");
    for (int N : def.exponents) {
      Bindings mine = def.bindings(nullptr, N), theirs = twin.hom->bindings(nullptr, N);
      bool multiplicative = std::all_of(mine.begin(), mine.end(), [](const auto& kv) {
        return kv.second.is_laurent_monomial();
      });
      CheckLine l = multiplicative
                        ? exponent_correspondence(mine, theirs, def.twin->params, def.twin->variables)
                        : exponent_correspondence(theirs, mine, def.twin->params, def.twin->variables);
      l.name = "N=" + std::to_string(N) + ": " + l.name + " with " + def.twin->spec;
      lines.push_back(std::move(l));
    }
  }
  from_lines(out, std::move(lines));
}

}  // namespace

std::vector<std::string> applicable_checks(const CatalogEntry& e) {
  std::vector<std::string> out;
  switch (e.kind) {
    case EntryKind::RMatrix:
      out = {"qybe", "triangular"};
      if (e.hecke) out.push_back("hecke");
      break;
    case EntryKind::ColouredFamily:
      out = {"cqybe", "colour-triangular"};
      break;
    case EntryKind::Contraction:
      return {"contraction"};
    case EntryKind::Hom:
      return {"hom"};
    case EntryKind::Presentation:
      break;
  }
  if (e.presentation) {
    if (e.kind != EntryKind::Presentation) out.push_back("relations");
    out.insert(out.end(), {"confluent", "normal-forms"});
    if (!e.classical_point.empty()) out.push_back("classical-limit");
    out.push_back("bialgebra");
    if (!e.antipode.empty()) out.push_back("antipode");
    if (!e.grouplike.empty()) out.push_back("grouplike");
    if (!e.subalgebras.empty()) out.push_back("subalgebra");
  }
  if (e.quotient) out.push_back("quotient");
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "qybe", "cqybe", "triangular", "colour-triangular", "hecke", "relations", "confluent",
      "normal-forms", "classical-limit", "bialgebra", "antipode", "grouplike", "subalgebra", "quotient",
      "contraction", "hom"};
  return names;
}

CheckOutcome run_check(const Catalog& cat, const CatalogEntry& e, const std::string& check) {
  CheckOutcome out;
  out.check = check;
  auto start = std::chrono::steady_clock::now();
  try {
    auto applicable = applicable_checks(e);
    if (std::find(applicable.begin(), applicable.end(), check) == applicable.end())
      throw SchemaError("check '" + check + "' does not apply to " + e.name);
    if (check == "qybe") {
      zero_matrix(out, qybe_residual(e.matrix));
    } else if (check == "cqybe") {
      zero_matrix(out, cqybe_residual(e.family(), colour_triple(e)));
    } else if (check == "triangular") {
      CheckResult r = triangular_check(e.matrix);
      out.status = r.pass ? CheckStatus::Pass : CheckStatus::Fail;
      out.witness = witness_text(r.witness);
    } else if (check == "colour-triangular") {
      CheckResult r = colour_triangular_check(e.family(), {e.colours.at(0), e.colours.at(1)});
      out.status = r.pass ? CheckStatus::Pass : CheckStatus::Fail;
      out.witness = witness_text(r.witness);
    } else if (check == "hecke") {
      zero_matrix(out, hecke_residual(e.matrix, e.hecke->first, e.hecke->second));
    } else if (check == "relations") {
      check_relations(out, e);
    } else if (check == "confluent") {
      check_confluent(out, e);
    } else if (check == "normal-forms") {
      check_normal_forms(out, e);
    } else if (check == "classical-limit") {
      check_classical(out, e);
    } else if (check == "bialgebra") {
      const Presentation& p = need_presentation(e);
      from_lines(out, check_bialgebra(p, build_rewrite_system(p)).lines);
    } else if (check == "antipode") {
      check_antipode_entry(out, e);
    } else if (check == "grouplike") {
      check_grouplike_entry(out, e);
    } else if (check == "subalgebra") {
      check_subalgebra(out, cat, e);
    } else if (check == "quotient") {
      check_quotient_entry(out, cat, e);
    } else if (check == "contraction") {
      check_contraction(out, cat, e);
    } else if (check == "hom") {
      check_hom_entry(out, cat, e);
    }
  } catch (const std::exception& ex) {
    out.status = CheckStatus::Error;
    out.witness = ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

EntryReport verify_entry(const Catalog& cat, const CatalogEntry& e, const std::vector<std::string>& checks) {
  EntryReport r;
  r.entry = e.name;
  for (const auto& c : checks.empty() ? e.flags : checks) r.checks.push_back(run_check(cat, e, c));
  return r;
}

}  // namespace qdeform
