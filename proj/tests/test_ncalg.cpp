#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "qdeform/errors.hpp"
#include "qdeform/ncalg/presentation.hpp"
#include "qdeform/ncalg/rewrite.hpp"
#include "qdeform/symexpr/parse.hpp"

using namespace qdeform;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }

SymMatrix glq2_matrix() {
  std::vector<RatFunc> e;
  for (auto* x : {"q", "0", "0", "0", "0", "1", "0", "0", "0", "q - q^-1", "1", "0", "0", "0", "0", "q"})
    e.push_back(P(x));
  return SymMatrix::from_entries(4, 4, std::move(e));
}

Presentation glq2() {
  Presentation p;
  p.name = "glq2";
  p.alphabet = Alphabet({"c", "a", "d", "b"});
  p.pattern = TPattern::parse({{"a", "b"}, {"c", "d"}});
  p.relations = rtt_relations(glq2_matrix(), p.pattern, p.alphabet);
  return p;
}

Presentation from_text(std::vector<std::string> names, std::vector<const char*> rels) {
  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  for (auto* r : rels) p.relations.push_back(parse_ncpoly(r, p.alphabet));
  return p;
}

std::vector<std::size_t> redexes(const RewriteSystem& rs, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rs.rule_for(w[i], w[i + 1])) out.push_back(i);
  return out;
}

// Every irreducible form reachable by any sequence of single rewrites.
void explore(const RewriteSystem& rs, const NCPoly& x, std::map<std::string, std::set<std::string>>& memo,
             std::set<std::string>& out) {
  const std::string key = x.to_string(rs.alphabet());
  if (auto it = memo.find(key); it != memo.end()) {
    out.insert(it->second.begin(), it->second.end());
    return;
  }
  std::set<std::string> found;
  bool reducible = false;
  for (const auto& [w, c] : x.terms()) {
    for (std::size_t pos : redexes(rs, w)) {
      reducible = true;
      NCPoly next = x - NCPoly::word(w, c) + rs.rewrite_at(w, pos).scaled(c);
      explore(rs, next, memo, found);
    }
  }
  if (!reducible) found.insert(key);
  memo[key] = found;
  out.insert(found.begin(), found.end());
}

}  // namespace

TEST(Rtt, StandardDeformationHasSixRelations) {
  Presentation p = glq2();
  ASSERT_EQ(p.relations.size(), 6u);
  std::vector<NCPoly> expected;
  for (auto* r : {"[1] a.c + [-q] c.a", "[1] d.c + [-q^-1] c.d", "[1] d.a + [-1] a.d + [q - q^-1] c.b",
                  "[1] b.c + [-1] c.b", "[1] b.a + [-q^-1] a.b", "[1] b.d + [-q] d.b"})
    expected.push_back(parse_ncpoly(r, p.alphabet));
  EXPECT_EQ(independent_relations(expected), p.relations);
}

TEST(Rtt, EntriesLieInTheIdeal) {
  Presentation p = glq2();
  RewriteSystem rs = build_rewrite_system(p);
  SymMatrix r = glq2_matrix();
  auto T = [&](std::size_t i, std::size_t j) { return p.pattern.entry(i, j, p.alphabet); };
  const std::size_t n = 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          NCPoly x;
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t o = 0; o < n; ++o) {
              x = x + (T(m, k) * T(o, l)).scaled(r(i * n + j, m * n + o));
              x = x - (T(j, o) * T(i, m)).scaled(r(m * n + o, k * n + l));
            }
          EXPECT_TRUE(rs.normal_form(x).is_zero()) << i << j << k << l;
        }
}

TEST(Rewrite, StandardDeformationIsConfluent) {
  RewriteSystem rs = build_rewrite_system(glq2());
  auto rep = check_confluence(rs);
  EXPECT_TRUE(rep.confluent);
  EXPECT_GT(rep.overlaps, 0u);
}

TEST(Rewrite, DetectsNonConfluence) {
  Presentation p = from_text({"a", "b"}, {"[1] b.a + [-1] a", "[1] a.b + [-1] b"});
  RewriteSystem rs = build_rewrite_system(p, false);
  auto rep = check_confluence(rs);
  ASSERT_FALSE(rep.confluent);
  EXPECT_THROW(build_rewrite_system(p), NotConfluent);
}

TEST(Rewrite, RejectsIncreasingRule) {
  Alphabet al({"x", "y"});
  Rule up{{0, 1}, NCPoly::word({1, 0})};
  EXPECT_THROW(RewriteSystem(al, {up}), NotOrientable);
}

TEST(Rewrite, PathIndependenceExhaustive) {
  RewriteSystem rs = build_rewrite_system(glq2());
  const Alphabet& al = rs.alphabet();
  for (auto* w : {"b.d.a.c", "d.a.b", "b.b.c.a", "d.c.a"}) {
    NCPoly x = parse_ncpoly(std::string("[1] ") + w, al);
    std::map<std::string, std::set<std::string>> memo;
    std::set<std::string> forms;
    explore(rs, x, memo, forms);
    ASSERT_EQ(forms.size(), 1u) << w;
    EXPECT_EQ(*forms.begin(), rs.normal_form(x).to_string(al));
  }
}

TEST(Rewrite, RandomWordsReduceByAnyStrategy) {
  RewriteSystem rs = build_rewrite_system(glq2());
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> letter(0, 3), len(2, 6);
  auto leftmost = [](const Word&, const std::vector<std::size_t>& ps) { return ps.front(); };
  auto rightmost = [](const Word&, const std::vector<std::size_t>& ps) { return ps.back(); };
  for (int t = 0; t < 100; ++t) {
    Word w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    NCPoly x = NCPoly::word(w);
    NCPoly nf = rs.normal_form(x);
    EXPECT_EQ(normal_form_by(rs, x, leftmost), nf);
    EXPECT_EQ(normal_form_by(rs, x, rightmost), nf);
  }
}

TEST(Rewrite, ClassicalLimitIsCommutative) {
  Presentation p = glq2();
  for (const auto& r : p.relations) EXPECT_TRUE(abelianize(r.substitute({{"q", RatFunc(1)}})).is_zero());
  EXPECT_FALSE(abelianize(p.relations[0]).is_zero());
}

TEST(Rewrite, Localization) {
  Presentation p = from_text({"x", "y"}, {"[1] y.x + [-q] x.y"});
  RewriteSystem rs = localize(build_rewrite_system(p), {"x"});
  const Alphabet& al = rs.alphabet();
  ASSERT_EQ(al.names(), (std::vector<std::string>{"x", "x^-1", "y"}));
  EXPECT_EQ(rs.normal_form(parse_ncpoly("[1] x.x^-1 + [1] x^-1.x", al)), NCPoly::scalar(2));
  EXPECT_EQ(rs.normal_form(parse_ncpoly("[1] y.x^-1", al)), parse_ncpoly("[q^-1] x^-1.y", al));
  EXPECT_EQ(rs.normal_form(parse_ncpoly("[1] x.y.x^-1", al)), parse_ncpoly("[q^-1] y", al));
  EXPECT_TRUE(check_confluence(rs).confluent);
}

TEST(Rewrite, LocalizationOfTwoGenerators) {
  Presentation p = from_text({"x", "y", "z"}, {"[1] y.x + [-q] x.y", "[1] z.x + [-1] x.z", "[1] z.y + [-p] y.z"});
  RewriteSystem rs = localize(build_rewrite_system(p), {"x", "z"});
  const Alphabet& al = rs.alphabet();
  EXPECT_TRUE(check_confluence(rs).confluent);
  EXPECT_EQ(rs.normal_form(parse_ncpoly("[1] z.x.y.z^-1.x^-1", al)).to_string(al), "[p*q^-1] y");
}

TEST(Rewrite, TensorSquareCommutesFactors) {
  Presentation p = from_text({"x", "y"}, {"[1] y.x + [-q] x.y"});
  RewriteSystem sq = tensor_square(build_rewrite_system(p));
  const Alphabet& al = sq.alphabet();
  EXPECT_EQ(sq.normal_form(parse_ncpoly("[1] y@2.x@1", al)), parse_ncpoly("[1] x@1.y@2", al));
  EXPECT_EQ(sq.normal_form(parse_ncpoly("[1] y@2.x@2", al)), parse_ncpoly("[q] x@2.y@2", al));
  EXPECT_TRUE(check_confluence(sq).confluent);
  NCPoly yx = parse_ncpoly("[1] y.x", p.alphabet);
  EXPECT_EQ(into_factor(yx, 2, 2).to_string(al), "[1] y@2.x@2");
}

TEST(Subalgebra, RestrictionKeepsRelations) {
  Presentation p = glq2();
  Presentation ab = restrict_subalgebra(p, {"a", "b"});
  EXPECT_EQ(ab.alphabet.names(), (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(ab.relations.size(), 1u);
  EXPECT_EQ(ab.relations[0], parse_ncpoly("[1] b.a + [-q^-1] a.b", ab.alphabet));
  EXPECT_THROW(restrict_subalgebra(p, {"a", "d"}), NotASubalgebra);
}

TEST(Subalgebra, SameRelationsUnderBinding) {
  Presentation p = glq2();
  Presentation other = p;
  for (auto& r : other.relations) r = r.substitute({{"q", P("t^-1")}});
  EXPECT_TRUE(same_relations(p, other, {{"t", P("q^-1")}}));
  std::string witness;
  EXPECT_FALSE(same_relations(p, other, {{"t", P("q")}}, &witness));
  EXPECT_FALSE(witness.empty());
}
