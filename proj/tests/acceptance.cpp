// Acceptance suite: one pass/fail line per criterion.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qdeform/catalog/catalog.hpp"
#include "qdeform/hopf/hopf.hpp"
#include "qdeform/ncalg/presentation.hpp"
#include "qdeform/ncalg/rewrite.hpp"
#include "qdeform/rmx/verify.hpp"
#include "qdeform/symexpr/parse.hpp"

using namespace qdeform;

namespace {

constexpr double kQybeSeconds = 60;
constexpr double kCqybeSeconds = 120;
constexpr double kVerifyAllSeconds = 15 * 60;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const Catalog& catalog() {
  static const Catalog cat = Catalog::load_directory(default_catalog_dir());
  return cat;
}

Verdict run_entry_check(Verdict v, const std::string& entry, const std::string& check, double budget = 0) {
  CheckOutcome c = run_check(catalog(), catalog().get(entry), check);
  bool ok = c.status == CheckStatus::Pass;
  std::string what = entry + " " + check + " (" + fmt(c.seconds) + ")";
  if (!ok && !c.witness.empty()) what += ": " + c.witness;
  v.require(ok, what);
  if (budget > 0) v.require(c.seconds < budget, entry + " " + check + " within " + fmt(budget));
  if (ok) v.note(what);
  return v;
}

Verdict qybe_suite() {
  Verdict v;
  for (auto* e : {"glq2", "glpq2", "grs", "glh2", "glhh2", "gmk"}) v = run_entry_check(v, e, "qybe", kQybeSeconds);
  return v;
}

Verdict cqybe_suite() {
  Verdict v;
  for (auto* e : {"gl2_coloured_q", "gl2_coloured_j", "grs_coloured", "gmkk_coloured"})
    v = run_entry_check(v, e, "cqybe", kCqybeSeconds);
  return v;
}

Verdict triangularity() {
  Verdict v;
  for (auto* e : {"glh2", "glhh2", "gmk"}) v = run_entry_check(v, e, "triangular");
  for (auto* e : {"gl2_coloured_j", "gmkk_coloured"}) v = run_entry_check(v, e, "colour-triangular");
  CheckResult std_q = triangular_check(catalog().get("glq2").matrix);
  v.require(!std_q.pass && std_q.witness.has_value(), "glq2 is reported non-triangular");
  if (std_q.witness) {
    RatFunc ratio = std_q.witness->value / (parse_ratfunc("q") - parse_ratfunc("q^-1"));
    v.require(ratio.is_laurent_monomial(), "glq2 witness is a monomial multiple of q - q^-1");
    v.note("glq2 witness " + std_q.witness->value.to_string() + " = (" + ratio.to_string() + ")(q - q^-1)");
  }
  return v;
}

Verdict contraction_pipeline() {
  Verdict v;
  for (auto [spec, target] : {std::pair{"glq2-to-glh2", "glh2"}, {"grs-to-gmk", "gmk"}, {"grsc-to-gmkkc", "gmkk_coloured"},
                              {"gl2cq-to-gl2cj", "gl2_coloured_j"}}) {
    CatalogEntry out = run_contraction(catalog(), catalog().get(spec));
    v.require(out.name == target && out.matrix == catalog().get(target).matrix,
              std::string(spec) + " reproduces frozen " + target);
    if (out.matrix == catalog().get(target).matrix) v.note(std::string(spec) + " = frozen " + target);
  }
  return v;
}

Verdict subalgebras() {
  Verdict v;
  auto check = [&](const char* big, const char* small, Bindings b) {
    Presentation sub = restrict_subalgebra(catalog().presentation(big), {"a", "b", "c", "d"});
    std::string witness;
    bool ok = same_relations(sub, catalog().presentation(small), b, &witness);
    v.require(ok, std::string(big) + " restricted to {a,b,c,d} matches " + small + (ok ? "" : ": " + witness));
    if (ok) v.note(std::string(big) + " on {a,b,c,d} = " + small);
  };
  check("grs", "glq2", {{"q", parse_ratfunc("r^-1")}});
  check("gmk", "glh2", {{"h", parse_ratfunc("m")}});
  return v;
}

Verdict hom_suite() {
  Verdict v;
  for (auto* name : {"grs-to-glpq", "gmk-to-glhh", "grsc-to-gl2cq", "gmkkc-to-gl2cj"}) {
    const CatalogEntry& e = catalog().get(name);
    const HomDef& def = *e.hom;
    for (int N : {1, 2, 3, -1}) {
      HopfReport r = check_hom(hom_spec(catalog(), def, N));
      std::string first;
      for (const auto& l : r.lines)
        if (!l.pass && first.empty()) first = l.name + ": " + l.witness;
      v.require(r.pass(), std::string(name) + " N=" + std::to_string(N) + (r.pass() ? "" : " (" + first + ")"));
    }
    for (const auto& c : def.controls) {
      HopfReport r = check_hom(hom_spec(catalog(), def, 1, c.override_map));
      v.require(!r.pass(), std::string(name) + " control '" + c.name + "' is rejected");
    }
    v.require(!def.controls.empty(), std::string(name) + " has a negative control");
  }
  // Exponent correspondence between the two uncoloured families.
  const CatalogEntry& mult = catalog().get("grs-to-glpq");
  const CatalogEntry& add = catalog().get("gmk-to-glhh");
  for (int N : {1, 2, 3, -1}) {
    CheckLine l = exponent_correspondence(mult.hom->bindings(mult.param_set(), N),
                                          add.hom->bindings(add.param_set(), N), mult.hom->twin->params,
                                          mult.hom->twin->variables);
    v.require(l.pass, "exponent correspondence N=" + std::to_string(N) + (l.pass ? "" : ": " + l.witness));
  }
  CheckOutcome rescaled = run_check(catalog(), catalog().get("grsc-to-gl2cq-rescaled"), "hom");
  v.note(std::string("grsc-to-gl2cq-rescaled (s^N = w^2): ") + to_string(rescaled.status));
  return v;
}

Verdict hopf_suite() {
  Verdict v;
  std::size_t presentations = 0;
  for (const auto& n : catalog().names()) {
    const CatalogEntry& e = catalog().get(n);
    if (!e.presentation) continue;
    ++presentations;
    const Presentation& p = catalog().presentation(n);
    HopfReport r = check_bialgebra(p, build_rewrite_system(p));
    v.require(r.pass(), n + " bialgebra");
  }
  v.note(std::to_string(presentations) + " presentations are bialgebras");
  for (auto* n : {"glq2", "glpq2", "grs"}) v = run_entry_check(v, n, "antipode");

  const CatalogEntry& grs = catalog().get("grs");
  const Presentation& p = catalog().presentation("grs");
  NCPoly delta = parse_ncpoly("[1] a.d.f + [-r^-1] b.c.f", p.alphabet);
  GrouplikeReport g = check_grouplike(p, build_rewrite_system(p), delta);
  v.require(g.grouplike && g.counit_one, "Df is grouplike");
  v.require(!g.central && !g.witness.empty(), "Df is not central");
  v.note("Df grouplike, not central (does not commute with " + g.witness + ")");
  v = run_entry_check(v, grs.name, "grouplike");
  return v;
}

Verdict rewriting() {
  Verdict v;
  std::size_t systems = 0;
  for (const auto& n : catalog().names()) {
    const CatalogEntry& e = catalog().get(n);
    if (!e.presentation) continue;
    const Presentation& p = catalog().presentation(n);
    RewriteSystem rs = build_rewrite_system(p, false);
    v.require(check_confluence(rs).confluent, n + " confluent");
    ++systems;
    if (!p.invertible.empty()) {
      v.require(check_confluence(localize(rs, p.invertible)).confluent, n + " localized confluent");
      ++systems;
    }
    if (!p.relations.empty()) {
      CheckOutcome nf = run_check(catalog(), e, "normal-forms");
      v.require(nf.status == CheckStatus::Pass, n + " random words reduce path-independently");
    }
    if (!e.classical_point.empty()) {
      CheckOutcome cl = run_check(catalog(), e, "classical-limit");
      v.require(cl.status == CheckStatus::Pass, n + " classical limit is commutative");
    }
  }
  for (auto* n : {"grs", "gmk", "grs_coloured", "gmkk_coloured"})
    v.require(!catalog().get(n).classical_point.empty(), std::string(n) + " has a classical point");
  v.note(std::to_string(systems) + " rewrite systems confluent");
  return v;
}

struct Shell {
  int code = -1;
  std::string out;
};

Shell shell(const std::string& cmd) {
  Shell r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 1 << 14> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void strip_timings(Json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, x] : j.items()) strip_timings(x);
  } else if (j.is_array()) {
    for (auto& x : j) strip_timings(x);
  }
}

Verdict determinism() {
  Verdict v;
  const std::string cmd = std::string(QDEFORM_CLI) + " --json verify --all";
  auto t0 = std::chrono::steady_clock::now();
  Shell a = shell(cmd);
  double first = seconds_since(t0);
  Shell b = shell(cmd);
  v.require(a.code == 0 || a.code == 1, "verify --all runs (exit " + std::to_string(a.code) + ")");
  v.require(a.code == b.code, "exit codes agree");
  Json ja, jb;
  try {
    ja = Json::parse(a.out);
    jb = Json::parse(b.out);
  } catch (const std::exception& ex) {
    v.require(false, std::string("reports parse: ") + ex.what());
    return v;
  }
  strip_timings(ja);
  strip_timings(jb);
  v.require(ja.dump() == jb.dump(), "reports identical modulo timings");
  v.require(first < kVerifyAllSeconds, "verify --all within 15 minutes");
  v.note("verify --all: " + fmt(first) + ", " + std::to_string(ja["entries"].size()) + " entries");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"QYBE suite", qybe_suite},
      {"CQYBE suite", cqybe_suite},
      {"triangularity", triangularity},
      {"contraction pipeline", contraction_pipeline},
      {"subalgebra claims", subalgebras},
      {"homomorphism suite", hom_suite},
      {"Hopf suite", hopf_suite},
      {"rewriting soundness", rewriting},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& ex) {
      v.require(false, std::string("error: ") + ex.what());
    }
    std::printf("criterion %zu %-22s %s (%s)\n", i + 1, criteria[i].first.c_str(), v.pass ? "PASS" : "FAIL",
                fmt(seconds_since(t0)).c_str());
    for (const auto& n : v.notes)
      if (verbose || n.rfind("FAILED", 0) == 0) std::printf("    %s\n", n.c_str());
    if (!v.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
