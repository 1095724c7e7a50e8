#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qdeform/catalog/catalog.hpp"
#include "qdeform/errors.hpp"
#include "qdeform/hopf/hopf.hpp"
#include "qdeform/ncalg/presentation.hpp"
#include "qdeform/rmx/verify.hpp"
#include "qdeform/symexpr/parse.hpp"

using namespace qdeform;

namespace {

RatFunc P(const std::string& s) { return parse_ratfunc(s); }

const Catalog& catalog() {
  static const Catalog cat = Catalog::load_directory(default_catalog_dir());
  return cat;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SymMatrix square(std::size_t n, const std::vector<std::string>& xs) {
  std::vector<RatFunc> e;
  for (const auto& x : xs) e.push_back(P(x));
  return SymMatrix::from_entries(n, n, std::move(e));
}

Presentation rtt_presentation(const SymMatrix& r) {
  Presentation p;
  p.name = "candidate";
  p.alphabet = Alphabet({"c", "a", "d", "b"});
  p.pattern = TPattern::parse({{"a", "b"}, {"c", "d"}});
  p.relations = rtt_relations(r, p.pattern, p.alphabet);
  return p;
}

bool confluent(const Presentation& p) {
  try {
    build_rewrite_system(p);
    return true;
  } catch (const NotConfluent&) {
    return false;
  }
}

// Catalog copy with one entry replaced.
Catalog with_entry(const CatalogEntry& e) {
  Catalog cat;
  for (const auto& n : catalog().names())
    if (n != e.name) cat.add(catalog().get(n));
  cat.add(e);
  return cat;
}

}  // namespace

TEST(Definition, EveryFileRoundTripsExactly) {
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(default_catalog_dir())) {
    if (f.path().extension() != ".json") continue;
    ++files;
    std::string text = slurp(f.path());
    CatalogEntry e = load_definition(Json::parse(text));
    EXPECT_EQ(dump_definition(to_json(e)), text) << f.path();
    EXPECT_EQ(f.path().stem().string(), e.name);
  }
  EXPECT_GE(files, 20u);
}

TEST(Definition, SchemaErrors) {
  Json j = to_json(catalog().get("glq2"));
  Json short_entries = j;
  short_entries["entries"].erase(short_entries["entries"].size() - 1);
  EXPECT_THROW(load_definition(short_entries), SchemaError);

  Json no_kind = j;
  no_kind.erase("kind");
  EXPECT_THROW(load_definition(no_kind), SchemaError);

  Json bad_kind = j;
  bad_kind["kind"] = "lie-algebra";
  EXPECT_THROW(load_definition(bad_kind), SchemaError);

  Json bad_expr = j;
  bad_expr["entries"][0] = "q +* 1";
  EXPECT_THROW(load_definition(bad_expr), ParseError);

  Json undeclared = j;
  undeclared["entries"][0] = "t";
  EXPECT_THROW(load_definition(undeclared), Error);
}

TEST(Catalog, LookupAndDuplicates) {
  EXPECT_THROW(catalog().get("nonexistent"), LookupError);
  Catalog cat;
  cat.add(catalog().get("glq2"));
  EXPECT_THROW(cat.add(catalog().get("glq2")), SchemaError);
  for (auto* n : {"glq2", "glpq2", "grs", "glh2", "glhh2", "gmk", "gl2_coloured_q", "gl2_coloured_j", "grs_coloured",
                  "gmkk_coloured", "grs-to-glpq", "gmk-to-glhh"})
    EXPECT_TRUE(catalog().contains(n)) << n;
}

TEST(Catalog, ProvenanceSources) {
  for (const auto& n : catalog().names()) {
    const auto& src = catalog().get(n).provenance.source;
    EXPECT_TRUE(src == "literature-derived" || src == "contraction-output" || src == "reconstructed-by-oracle") << n;
  }
  EXPECT_EQ(catalog().get("glh2").provenance.source, "contraction-output");
}

TEST(Catalog, ContractionOutputsAreReproduced) {
  for (auto [spec, target] : {std::pair{"glq2-to-glh2", "glh2"}, {"grs-to-gmk", "gmk"}, {"grsc-to-gmkkc", "gmkk_coloured"},
                              {"gl2cq-to-gl2cj", "gl2_coloured_j"}}) {
    CatalogEntry out = run_contraction(catalog(), catalog().get(spec));
    EXPECT_EQ(out.name, target);
    EXPECT_EQ(out.matrix, catalog().get(target).matrix) << spec;
  }
}

TEST(Verify, ClaimedFlags) {
  EXPECT_TRUE(verify_entry(catalog(), catalog().get("glq2")).pass());
  EntryReport gmk = verify_entry(catalog(), catalog().get("gmk"), {"qybe", "triangular", "confluent"});
  EXPECT_TRUE(gmk.pass());
  EXPECT_EQ(gmk.checks.size(), 3u);
}

TEST(Verify, FalseFlagFails) {
  Json j = to_json(catalog().get("glq2"));
  j["flags"].push_back("triangular");
  CatalogEntry e = load_definition(j);
  EntryReport r = verify_entry(catalog(), e);
  EXPECT_FALSE(r.pass());
  for (const auto& c : r.checks) EXPECT_EQ(c.status == CheckStatus::Pass, c.check != "triangular") << c.check;
}

TEST(Verify, UnknownCheckIsAnError) {
  CheckOutcome c = run_check(catalog(), catalog().get("glq2"), "frobnicate");
  EXPECT_EQ(c.status, CheckStatus::Error);
}

// Reconstruction oracles: search a small monomial ansatz for the stated
// constraints and confirm that the frozen entry is the unique survivor.

TEST(Reconstruction, StandardDeformation) {
  const std::vector<std::string> mons{"1", "q", "q^-1", "q^2", "q^-2"};
  std::vector<std::string> offs;
  for (const auto& x : mons)
    for (const auto& y : mons)
      if (x != y) offs.push_back(x + " - " + y);
  std::vector<SymMatrix> survivors;
  for (const auto& d2 : mons)
    for (const auto& d3 : mons)
      for (const auto& d4 : mons)
        for (const auto& y : offs) {
          SymMatrix r = square(4, {"q", "0", "0", "0", "0", d2, "0", "0", "0", y, d3, "0", "0", "0", "0", d4});
          if (!qybe_residual(r).is_zero()) continue;
          if (!r.substitute({{"q", RatFunc(1)}}).is_identity()) continue;
          Presentation p = rtt_presentation(r);
          if (p.relations.size() != 6 || !confluent(p)) continue;
          if (!hecke_residual(r, P("q"), P("-q^-1")).is_zero()) continue;
          SymMatrix flip = permutation_matrix(2);
          SymMatrix t(4, 4);
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) t(i, j) = r(j, i);
          if (!(flip * r * flip == t)) continue;
          survivors.push_back(r);
        }
  ASSERT_EQ(survivors.size(), 1u);
  EXPECT_EQ(survivors[0], catalog().get("glq2").matrix);
}

TEST(Reconstruction, TwoParameterDeformation) {
  std::vector<std::string> mons;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) mons.push_back("p^(" + std::to_string(i) + ")*q^(" + std::to_string(j) + ")");
  const Presentation& grs = catalog().presentation("grs");
  RewriteSystem grs_rs = build_rewrite_system(grs);
  std::vector<SymMatrix> survivors;
  for (const auto& d3 : mons)
    for (const auto& y1 : mons)
      for (const auto& y2 : mons) {
        if (y1 == y2) continue;
        SymMatrix r = square(4, {"q", "0", "0", "0", "0", "1", "0", "0", "0", y1 + " - " + y2, d3, "0", "0", "0", "0", "q"});
        if (!qybe_residual(r).is_zero()) continue;
        if (!r.substitute({{"p", RatFunc(1)}, {"q", RatFunc(1)}}).is_identity()) continue;
        Presentation p = rtt_presentation(r);
        if (!confluent(p)) continue;
        HomSpec h;
        h.source = grs;
        h.source_system = grs_rs;
        h.target = p;
        for (auto* g : {"a", "b", "c", "d"}) h.images[g] = {"f", g};
        h.bindings = {{"p", P("r^-1*s")}, {"q", P("r^-1*s^-1")}};
        if (!check_hom(h).pass()) continue;
        survivors.push_back(r);
      }
  ASSERT_EQ(survivors.size(), 1u);
  EXPECT_EQ(survivors[0], catalog().get("glpq2").matrix);
}

TEST(Reconstruction, TwoParameterNineByNine) {
  const std::vector<std::string> mons{"1", "s", "s^-1", "r", "r^-1"};
  const Presentation& glpq2 = catalog().presentation("glpq2");
  std::vector<std::vector<std::string>> passing;
  for (const auto& e02 : mons)
    for (const auto& e12 : mons)
      for (const auto& e20 : mons)
        for (const auto& e21 : mons) {
          std::vector<std::string> xs(81, "0");
          auto set = [&](int i, int j, const std::string& v) { xs[i * 9 + j] = v; };
          set(0, 0, "r^-1");
          set(1, 1, "1");
          set(3, 3, "1");
          set(3, 1, "r^-1 - r");
          set(4, 4, "r^-1");
          set(2, 2, e02);
          set(5, 5, e12);
          set(6, 6, e20);
          set(7, 7, e21);
          set(8, 8, "1");
          SymMatrix r = square(9, xs);
          if (!qybe_residual(r).is_zero()) continue;
          if (!r.substitute({{"r", RatFunc(1)}, {"s", RatFunc(1)}}).is_identity()) continue;
          Presentation p;
          p.name = "candidate";
          p.alphabet = Alphabet({"c", "a", "d", "b", "f"});
          p.pattern = TPattern::parse({{"a", "b", "0"}, {"c", "d", "0"}, {"0", "0", "f"}});
          p.invertible = {"f"};
          p.relations = rtt_relations(r, p.pattern, p.alphabet);
          if (p.relations.size() != 10 || !confluent(p)) continue;
          HomSpec h;
          h.source = p;
          h.source_system = build_rewrite_system(p);
          h.target = glpq2;
          for (auto* g : {"a", "b", "c", "d"}) h.images[g] = {"f", g};
          h.bindings = {{"p", P("r^-1*s")}, {"q", P("r^-1*s^-1")}};
          if (!check_hom(h).pass()) continue;
          passing.push_back({e02, e12, e20, e21});
        }
  // Twists of the f-sector survive the hom; unitarity there and the
  // normalization R(e0 f, e0 f) = 1 leave one.
  EXPECT_EQ(passing.size(), 4u);
  std::vector<std::vector<std::string>> unique;
  for (const auto& c : passing)
    if ((P(c[0]) * P(c[2])).is_one() && (P(c[1]) * P(c[3])).is_one() && c[0] == "1") unique.push_back(c);
  ASSERT_EQ(unique.size(), 1u);
  const SymMatrix& frozen = catalog().get("grs").matrix;
  EXPECT_EQ(frozen(2, 2), P(unique[0][0]));
  EXPECT_EQ(frozen(5, 5), P(unique[0][1]));
  EXPECT_EQ(frozen(6, 6), P(unique[0][2]));
  EXPECT_EQ(frozen(7, 7), P(unique[0][3]));
}

TEST(Reconstruction, ColouredStandardFamily) {
  std::vector<std::string> mons;
  for (int i = -2; i <= 2; i += 2)
    for (int j = -2; j <= 2; j += 2) mons.push_back("w^(" + std::to_string(i) + ")*w'^(" + std::to_string(j) + ")");
  const CatalogEntry& frozen = catalog().get("gl2_coloured_q");
  std::array<ColourGroup, 3> cs{ColourGroup{"x"}, ColourGroup{"y"}, ColourGroup{"z"}};
  std::vector<SymMatrix> survivors;
  std::size_t solutions = 0;
  for (const auto& m1 : mons)
    for (const auto& m2 : mons)
      for (const auto& m3 : mons) {
        SymMatrix r = square(4, {"1", "0", "0", "0", "0", "r*" + m1, "0", "0", "0", "1 - r^2", "r*" + m2, "0", "0", "0",
                                 "0", m3});
        ColouredFamily fam(r, {"w"}, {"w'"});
        if (!cqybe_residual(fam, cs).is_zero()) continue;
        ++solutions;
        Json j = to_json(frozen);
        for (std::size_t k = 0; k < 16; ++k) j["entries"][k] = r.entries()[k].to_string();
        j.erase("relations");
        Catalog cat = with_entry(load_definition(j));
        CheckOutcome hom = run_check(cat, cat.get("grsc-to-gl2cq-rescaled"), "hom");
        if (hom.status == CheckStatus::Pass) survivors.push_back(r);
      }
  EXPECT_EQ(solutions, 3u);
  ASSERT_EQ(survivors.size(), 1u);
  EXPECT_EQ(survivors[0], frozen.matrix);
}

TEST(Hom, ParameterRelations) {
  const auto& a = *catalog().get("grs-to-glpq").hom;
  const auto& b = *catalog().get("gmk-to-glhh").hom;
  for (int N : {1, 2, 3, -1}) {
    Bindings m = a.bindings(catalog().get("grs-to-glpq").param_set(), N, {});
    Bindings l = b.bindings(catalog().get("gmk-to-glhh").param_set(), N, {});
    EXPECT_EQ(m["p"] * m["q"], P("r^-2"));
    EXPECT_EQ(l["h"] + l["h'"], P("-2*m"));
  }
}

TEST(Hom, NegativeControlsAreRejected) {
  for (auto* n : {"grs-to-glpq", "gmk-to-glhh", "gmkkc-to-gl2cj"}) {
    const auto& e = catalog().get(n);
    ASSERT_FALSE(e.hom->controls.empty()) << n;
    for (const auto& c : e.hom->controls) {
      HomSpec s = hom_spec(catalog(), *e.hom, 1, c.override_map);
      EXPECT_FALSE(check_hom(s).pass()) << n << " " << c.name;
    }
  }
}
