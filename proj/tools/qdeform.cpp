// Command-line driver for the catalog verifiers.
#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <thread>

#include "qdeform/catalog/catalog.hpp"
#include "qdeform/errors.hpp"
#include "qdeform/rmx/verify.hpp"
#include "qdeform/symexpr/parse.hpp"

using namespace qdeform;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

const char* kVersion = "qdeform 0.1.0";

struct Options {
  std::string catalog_dir;
  bool json = false;
  int jobs = 0;
};

std::string stamp() {
  std::string s = kVersion;
#ifdef __VERSION__
  s += " (g++ " __VERSION__ ")";
#endif
  return s;
}

Json outcome_json(const CheckOutcome& c) {
  Json j;
  j["check"] = c.check;
  j["status"] = to_string(c.status);
  j["witness"] = c.witness;
  Json d = Json::array();
  for (const auto& l : c.details) d.push_back({{"name", l.name}, {"pass", l.pass}, {"witness", l.witness}});
  j["details"] = d;
  j["seconds"] = c.seconds;
  return j;
}

void print_outcome(const std::string& entry, const CheckOutcome& c) {
  std::cout << entry << " " << c.check << ": " << to_string(c.status);
  std::printf(" (%.2f s)\n", c.seconds);
  if (!c.witness.empty()) std::cout << "  " << c.witness << "\n";
}

Json report_json(const std::string& command, const std::vector<EntryReport>& reports, bool pass) {
  Json j;
  j["command"] = command;
  j["version"] = stamp();
  Json es = Json::array();
  for (const auto& r : reports) {
    Json e;
    e["entry"] = r.entry;
    Json cs = Json::array();
    for (const auto& c : r.checks) cs.push_back(outcome_json(c));
    e["checks"] = cs;
    es.push_back(e);
  }
  j["entries"] = es;
  j["status"] = pass ? "pass" : "fail";
  return j;
}

int emit(const Options& o, const std::string& command, const std::vector<EntryReport>& reports) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (o.json) {
    std::cout << report_json(command, reports, pass).dump(2) << "\n";
  } else {
    for (const auto& r : reports)
      for (const auto& c : r.checks) print_outcome(r.entry, c);
    std::cout << (pass ? "all checks passed" : "some checks failed") << "\n";
  }
  return pass ? kPass : kFail;
}

Catalog open_catalog(const Options& o) {
  return Catalog::load_directory(o.catalog_dir.empty() ? default_catalog_dir() : std::filesystem::path(o.catalog_dir));
}

std::pair<std::string, std::string> split_binding(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("expected name=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

int cmd_verify(const Options& o, const std::vector<std::string>& names, bool all,
               const std::vector<std::string>& checks) {
  Catalog cat = open_catalog(o);
  std::vector<std::string> selected = all ? cat.names() : names;
  if (selected.empty()) throw CLI::ValidationError("give --entry or --all");
  std::vector<std::pair<std::string, std::string>> tasks;
  for (const auto& n : selected) {
    const CatalogEntry& e = cat.get(n);
    for (const auto& c : checks.empty() ? e.flags : checks) tasks.emplace_back(n, c);
  }
  std::vector<CheckOutcome> results(tasks.size());
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t i = 0; i < tasks.size(); ++i)
    results[i] = run_check(cat, cat.get(tasks[i].first), tasks[i].second);
  std::vector<EntryReport> reports;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (reports.empty() || reports.back().entry != tasks[i].first) reports.push_back({tasks[i].first, {}});
    reports.back().checks.push_back(std::move(results[i]));
  }
  return emit(o, "verify", reports);
}

int cmd_contract(const Options& o, const std::string& spec_name, const std::string& source, const std::string& eta,
                 const std::string& limit, const std::string& transform, const std::vector<std::string>& rebind,
                 const std::vector<std::string>& result_slots, const std::string& output) {
  Catalog cat = open_catalog(o);
  CatalogEntry spec;
  if (!spec_name.empty()) {
    spec = cat.get(spec_name);
    if (!spec.contraction) throw LookupError(spec_name + " is not a contraction");
  } else {
    if (source.empty() || eta.empty() || limit.empty())
      throw CLI::ValidationError("give --spec, or --source with --eta and --limit");
    const CatalogEntry& src = cat.get(source);
    ContractionDef d;
    d.source = source;
    d.target = source + "_contracted";
    d.eta = parse_ratfunc(eta).to_string();
    auto [param, value] = split_binding(limit);
    d.limit_param = param;
    d.limit_value = parse_ratfunc(value).to_string();
    const ContractionDef* stored = nullptr;
    for (const auto& name : cat.names()) {
      const auto& c = cat.get(name);
      if (c.contraction && c.contraction->source == source && c.contraction->eta == d.eta &&
          c.contraction->limit_param == d.limit_param && c.contraction->limit_value == d.limit_value)
        stored = &*c.contraction;
    }
    if (stored) d.target = stored->target;
    std::size_t n = 1;
    while (n * n < src.dim) ++n;
    std::string kind = transform.empty() ? (n == 2 ? "g" : "G") : transform;
    if (kind == "g" || kind == "G") {
      if (kind == "g" && n != 2) throw CLI::ValidationError("transform g needs a 4x4 R-matrix");
      if (kind == "G" && n != 3) throw CLI::ValidationError("transform G needs a 9x9 R-matrix");
      d.transform_dim = n;
      d.transform.assign(n * n, "0");
      for (std::size_t i = 0; i < n; ++i) d.transform[i * n + i] = "1";
      d.transform[1] = "eta";
    } else if (kind == "identity") {
      d.transform_dim = n;
      d.transform.assign(n * n, "0");
      for (std::size_t i = 0; i < n; ++i) d.transform[i * n + i] = "1";
    } else {
      throw CLI::ValidationError("transform must be g, G or identity");
    }
    for (const auto& b : rebind) {
      auto [k, v] = split_binding(b);
      d.rebind[k] = parse_ratfunc(v).to_string();
    }
    if (rebind.empty() && stored) d.rebind = stored->rebind;
    if (result_slots.size() == 2) {
      d.result_first = {result_slots[0]};
      d.result_second = {result_slots[1]};
    } else if (src.colour_slots && stored) {
      d.result_first = stored->result_first;
      d.result_second = stored->result_second;
    }
    spec.name = "inline";
    spec.kind = EntryKind::Contraction;
    spec.contraction = d;
  }

  CatalogEntry out = run_contraction(cat, spec);
  CheckOutcome match;
  match.check = "matches frozen " + out.name;
  if (cat.contains(out.name)) {
    const CatalogEntry& frozen = cat.get(out.name);
    bool same = frozen.matrix == out.matrix;
    match.status = same ? CheckStatus::Pass : CheckStatus::Fail;
    if (!same) match.witness = "contracted matrix differs from the catalog";
  } else {
    match.check = "contract";
    match.status = CheckStatus::Pass;
    match.witness = "no frozen twin named " + out.name;
  }
  Json doc = to_json(out);
  if (!output.empty()) {
    std::ofstream f(output);
    f << dump_definition(doc);
  }
  if (o.json) {
    Json j = report_json("contract", {{spec.contraction->source, {match}}}, match.status == CheckStatus::Pass);
    j["definition"] = doc;
    std::cout << j.dump(2) << "\n";
  } else {
    if (output.empty()) std::cout << dump_definition(doc);
    print_outcome(spec.contraction->source, match);
  }
  return match.status == CheckStatus::Pass ? kPass : kFail;
}

int cmd_relations(const Options& o, const std::string& name) {
  Catalog cat = open_catalog(o);
  const CatalogEntry& e = cat.get(name);
  if (!e.presentation) throw LookupError(name + " has no T-pattern");
  const Presentation& p = *e.presentation;
  std::vector<NCPoly> rels = e.kind == EntryKind::ColouredFamily
                                 ? coloured_rtt_relations(e.family(), p.pattern, p.alphabet, p.colours)
                                 : e.kind == EntryKind::RMatrix ? rtt_relations(e.matrix, p.pattern, p.alphabet)
                                                                : independent_relations(p.relations);
  Presentation q = p;
  q.relations = rels;
  auto report = check_confluence(build_rewrite_system(q, false));
  std::string witness;
  if (!report.confluent) {
    for (Letter l : report.failures.front().overlap) witness += (witness.empty() ? "" : ".") + p.alphabet.name(l);
    witness = "overlap " + witness;
  }
  if (o.json) {
    Json j;
    j["command"] = "relations";
    j["version"] = stamp();
    j["entry"] = name;
    j["generators"] = p.alphabet.names();
    std::vector<std::string> texts;
    for (const auto& r : rels) texts.push_back(r.to_string(p.alphabet));
    j["relations"] = texts;
    j["confluent"] = report.confluent;
    j["witness"] = witness;
    j["status"] = report.confluent ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rels) std::cout << r.to_string(p.alphabet) << " = 0\n";
    std::cout << rels.size() << " relations, " << (report.confluent ? "confluent" : "not confluent: " + witness)
              << "\n";
  }
  return report.confluent ? kPass : kFail;
}

int cmd_hom(const Options& o, const std::string& name, const std::vector<int>& exponents,
            const std::vector<std::string>& overrides) {
  Catalog cat = open_catalog(o);
  const CatalogEntry& e = cat.get(name);
  if (!e.hom) throw LookupError(name + " is not a hom");
  std::map<std::string, std::string> over;
  for (const auto& s : overrides) over.insert(split_binding(s));
  CatalogEntry run = e;
  if (!exponents.empty()) run.hom->exponents = exponents;
  std::vector<CheckOutcome> checks;
  if (over.empty()) {
    run.hom->controls.clear();
    checks.push_back(run_check(cat, run, "hom"));
  } else {
    for (int N : run.hom->exponents) {
      CheckOutcome c;
      c.check = "hom N=" + std::to_string(N);
      auto start = std::chrono::steady_clock::now();
      try {
        HopfReport r = check_hom(hom_spec(cat, *run.hom, N, over));
        c.status = r.pass() ? CheckStatus::Pass : CheckStatus::Fail;
        c.details = r.lines;
        for (const auto& l : r.lines)
          if (!l.pass && c.witness.empty()) c.witness = l.name + ": " + l.witness;
      } catch (const std::exception& ex) {
        c.status = CheckStatus::Error;
        c.witness = ex.what();
      }
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      checks.push_back(std::move(c));
    }
  }
  return emit(o, "hom", {{name, checks}});
}

int cmd_export(const Options& o, const std::string& name, const std::string& file) {
  CatalogEntry e;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw LookupError("cannot read " + file);
    e = load_definition(Json::parse(in));
  } else {
    e = open_catalog(o).get(name);
  }
  std::cout << dump_definition(to_json(e));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for quantum and Jordanian R-matrices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--catalog", o.catalog_dir, "Catalog directory (default: $QDEFORM_CATALOG or the built-in one)");
  app.add_flag("--json", o.json, "Write a JSON report to stdout");
  app.add_option("--jobs", o.jobs, "Parallel checks (default: available cores)")->check(CLI::NonNegativeNumber);
  app.set_version_flag("--version", kVersion);

  auto* verify = app.add_subcommand("verify", "Run checks on catalog entries");
  std::vector<std::string> entries, checks;
  bool all = false;
  verify->add_option("--entry", entries, "Entry name (repeatable)");
  verify->add_flag("--all", all, "Every entry, with its claimed flags");
  verify->add_option("--check", checks, "Check name (repeatable; default: the claimed flags)")
      ->check(CLI::IsMember(check_names()));

  auto* contract = app.add_subcommand("contract", "Contract an R-matrix by a singular limit");
  std::string spec, source, eta, limit, transform, output;
  std::vector<std::string> rebind;
  contract->add_option("--spec", spec, "Stored contraction");
  contract->add_option("--source", source, "Source entry");
  contract->add_option("--eta", eta, "Definition of eta");
  contract->add_option("--limit", limit, "Limit as param=value");
  contract->add_option("--transform", transform, "g, G or identity");
  contract->add_option("--rebind", rebind, "Parameter rebinding name=expr (repeatable)");
  std::vector<std::string> result_slots;
  contract->add_option("--result-slots", result_slots, "Colour slots of a coloured result (first second)")
      ->expected(2);
  contract->add_option("--output", output, "Write the contracted definition here");

  auto* relations = app.add_subcommand("relations", "Print the RTT relations and the confluence verdict");
  std::string rel_entry;
  relations->add_option("--entry", rel_entry, "Entry name")->required();

  auto* hom = app.add_subcommand("hom", "Check a homomorphism");
  std::string hom_name;
  std::vector<int> exponents;
  std::vector<std::string> overrides;
  hom->add_option("--spec", hom_name, "Stored hom")->required();
  hom->add_option("--N", exponents, "Exponent (repeatable; default: the stored list)");
  hom->add_option("--override", overrides, "Parameter override name=expr (repeatable)");

  auto* exp = app.add_subcommand("export", "Print the canonical form of a definition");
  std::string exp_entry, exp_file;
  exp->add_option("--entry", exp_entry, "Entry name");
  exp->add_option("--file", exp_file, "Definition file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    if (*verify) return cmd_verify(o, entries, all, checks);
    if (*contract) return cmd_contract(o, spec, source, eta, limit, transform, rebind, result_slots, output);
    if (*relations) return cmd_relations(o, rel_entry);
    if (*hom) return cmd_hom(o, hom_name, exponents, overrides);
    if (*exp) return cmd_export(o, exp_entry, exp_file);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
