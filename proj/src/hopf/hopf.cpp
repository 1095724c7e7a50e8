#include "qdeform/hopf/hopf.hpp"

#include <algorithm>
#include <set>

#include "qdeform/errors.hpp"

namespace qdeform {

bool HopfReport::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

void HopfReport::add(std::string name, bool pass, std::string witness) {
  lines.push_back({std::move(name), pass, std::move(witness)});
}

void HopfReport::require() const {
  for (const auto& l : lines)
    if (!l.pass) throw AxiomFailure(l.name + ": " + l.witness);
}

LocalAlgebra HopfData::local_algebra() const { return LocalAlgebra(system, presentation.invertible, quasi_central); }

namespace {

std::vector<ColourGroup> colour_list(const Presentation& p) {
  if (p.is_coloured()) return p.colours;
  return {ColourGroup{}};
}

const std::string kInverseSuffix = "^-1";

std::optional<std::string> inverted_generator(const std::string& name) {
  if (name.size() > kInverseSuffix.size() && name.ends_with(kInverseSuffix))
    return name.substr(0, name.size() - kInverseSuffix.size());
  return std::nullopt;
}

// Copy of x in tensor factor f (1-based) of a product of alphabets of size n.
NCPoly factor(const NCPoly& x, std::size_t n, int f) {
  if (f == 1) return x;
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    Word v = w;
    for (auto& l : v) l = static_cast<Letter>(l + (f - 1) * n);
    out.add_term(v, c);
  }
  return out;
}

std::string text(const NCPoly& x, const Alphabet& a) { return x.is_zero() ? "0" : x.to_string(a); }

Alphabet square_alphabet(const Alphabet& a) {
  std::vector<std::string> names;
  for (const auto& x : a.names()) names.push_back(x + "@1");
  for (const auto& x : a.names()) names.push_back(x + "@2");
  return Alphabet(std::move(names));
}

// Letters commute across the factors of a triple tensor product; order each
// word by factor.
NCPoly sort_factors(const NCPoly& x, std::size_t n) {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    Word v = w;
    std::stable_sort(v.begin(), v.end(), [n](Letter a, Letter b) { return a / n < b / n; });
    out.add_term(v, c);
  }
  return out;
}

}  // namespace

std::vector<std::vector<NCPoly>> t_matrix(const Presentation& p, const ColourGroup& colour) {
  const std::size_t n = p.pattern.n();
  std::vector<std::vector<NCPoly>> t(n, std::vector<NCPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = p.pattern.entry(i, j, p.alphabet, colour);
  return t;
}

std::vector<std::optional<NCPoly>> coproduct_map(const Presentation& p, const Alphabet& alphabet) {
  const std::size_t m = alphabet.size();
  const std::size_t n = p.pattern.n();
  std::vector<std::optional<NCPoly>> images(m);
  for (const auto& colour : colour_list(p)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string g = p.pattern.generator(i, j, colour);
        if (g.empty()) continue;
        NCPoly d;
        for (std::size_t k = 0; k < n; ++k) {
          NCPoly left = p.pattern.entry(i, k, alphabet, colour);
          NCPoly right = p.pattern.entry(k, j, alphabet, colour);
          d = d + factor(left, m, 1) * factor(right, m, 2);
        }
        images[alphabet.at(g)] = std::move(d);
      }
  }
  for (Letter l = 0; l < m; ++l) {
    if (images[l]) continue;
    auto g = inverted_generator(alphabet.name(l));
    if (!g) throw SchemaError("generator " + alphabet.name(l) + " is not in the T-pattern");
    images[l] = factor(NCPoly::letter(l), m, 1) * factor(NCPoly::letter(l), m, 2);
  }
  return images;
}

std::vector<std::optional<NCPoly>> counit_map(const Presentation& p, const Alphabet& alphabet) {
  const std::size_t n = p.pattern.n();
  std::vector<std::optional<NCPoly>> images(alphabet.size());
  for (const auto& colour : colour_list(p))
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string g = p.pattern.generator(i, j, colour);
        if (!g.empty()) images[alphabet.at(g)] = i == j ? NCPoly::scalar(RatFunc(1)) : NCPoly();
      }
  for (Letter l = 0; l < alphabet.size(); ++l) {
    if (images[l]) continue;
    if (!inverted_generator(alphabet.name(l)))
      throw SchemaError("generator " + alphabet.name(l) + " is not in the T-pattern");
    images[l] = NCPoly::scalar(RatFunc(1));
  }
  return images;
}

std::vector<int> letter_colours(const Presentation& p, const Alphabet& alphabet) {
  std::vector<int> out(alphabet.size(), -1);
  if (!p.is_coloured()) return out;
  const std::size_t n = p.pattern.n();
  for (std::size_t c = 0; c < p.colours.size(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (p.pattern.cell(i, j).kind != PatternCell::Kind::Generator || !p.pattern.cell(i, j).coloured) continue;
        std::string g = p.pattern.generator(i, j, p.colours[c]);
        if (auto l = alphabet.find(g)) out[*l] = static_cast<int>(c);
        if (auto l = alphabet.find(inverse_name(g))) out[*l] = static_cast<int>(c);
      }
  return out;
}

HopfReport check_bialgebra(const Presentation& p, const RewriteSystem& rs) {
  HopfReport report;
  const Alphabet& a = rs.alphabet();
  const std::size_t m = a.size();
  auto delta = coproduct_map(p, a);
  auto eps = counit_map(p, a);
  RewriteSystem sq = tensor_square(rs);
  Alphabet sq_alpha = square_alphabet(a);
  auto colours = letter_colours(p, a);

  auto relations = independent_relations(p.relations);
  std::string eps_witness, one_witness, both_witness;
  bool any_mixed = false;
  for (const auto& rel : relations) {
    NCPoly e = rel.apply_letter_map(eps);
    if (!e.is_zero() && eps_witness.empty()) eps_witness = text(rel, a) + " maps to " + text(e, a);
    NCPoly d = sq.normal_form(rel.apply_letter_map(delta));
    std::set<int> seen;
    for (Letter l : rel.letters())
      if (colours[l] >= 0) seen.insert(colours[l]);
    bool mixed = seen.size() > 1;
    any_mixed = any_mixed || mixed;
    std::string& w = mixed ? both_witness : one_witness;
    if (!d.is_zero() && w.empty()) w = text(rel, a) + " maps to " + text(d, sq_alpha);
  }
  report.add("counit is an algebra map", eps_witness.empty(), eps_witness);
  if (p.is_coloured()) {
    report.add("coproduct is an algebra map (one colour)", one_witness.empty(), one_witness);
    if (any_mixed) report.add("coproduct is an algebra map (both colours)", both_witness.empty(), both_witness);
  } else {
    report.add("coproduct is an algebra map", one_witness.empty(), one_witness);
  }

  // Coassociativity and counit laws on generators, in the triple product.
  const std::size_t n = p.pattern.n();
  std::string coassoc, counit;
  for (const auto& colour : colour_list(p)) {
    auto t = t_matrix(p, colour);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string g = p.pattern.generator(i, j, colour);
        if (g.empty()) continue;
        NCPoly left, right, eps_left, eps_right;
        for (std::size_t k = 0; k < n; ++k) {
          NCPoly dk_left, dk_right;
          for (std::size_t l = 0; l < n; ++l) {
            dk_left = dk_left + factor(t[i][l], m, 1) * factor(t[l][k], m, 2);
            dk_right = dk_right + factor(t[k][l], m, 2) * factor(t[l][j], m, 3);
          }
          left = left + dk_left * factor(t[k][j], m, 3);
          right = right + factor(t[i][k], m, 1) * dk_right;
          eps_left = eps_left + t[i][k].apply_letter_map(eps) * t[k][j];
          eps_right = eps_right + t[i][k] * t[k][j].apply_letter_map(eps);
        }
        if (!(sort_factors(left, m) == sort_factors(right, m)) && coassoc.empty()) coassoc = g;
        NCPoly gen = NCPoly::letter(a.at(g));
        if ((!(eps_left == gen) || !(eps_right == gen)) && counit.empty()) counit = g;
      }
  }
  report.add("coassociativity on generators", coassoc.empty(), coassoc);
  report.add("counit law on generators", counit.empty(), counit);
  return report;
}

GrouplikeReport check_grouplike(const Presentation& p, const RewriteSystem& rs, const NCPoly& x) {
  GrouplikeReport out;
  const Alphabet& a = rs.alphabet();
  const std::size_t m = a.size();
  RewriteSystem sq = tensor_square(rs);
  NCPoly nx = rs.normal_form(x);
  NCPoly d = sq.normal_form(nx.apply_letter_map(coproduct_map(p, a)) - factor(nx, m, 1) * factor(nx, m, 2));
  out.grouplike = d.is_zero();
  out.coproduct_residual = text(d, square_alphabet(a));
  NCPoly e = nx.apply_letter_map(counit_map(p, a));
  out.counit_one = e == NCPoly::scalar(RatFunc(1));
  out.central = true;
  for (Letter g = 0; g < m; ++g) {
    NCPoly c = rs.normal_form(nx * NCPoly::letter(g) - NCPoly::letter(g) * nx);
    if (!c.is_zero()) {
      out.central = false;
      out.witness = a.name(g);
      break;
    }
  }
  return out;
}

HopfReport check_antipode(const HopfData& h) {
  HopfReport report;
  const Presentation& p = h.presentation;
  LocalAlgebra la = h.local_algebra();
  const Alphabet& la_alpha = la.alphabet();
  const Alphabet& a = p.alphabet;

  std::vector<std::optional<NCPoly>> s(a.size());
  std::string missing;
  for (Letter l = 0; l < a.size(); ++l) {
    auto it = h.antipode.find(a.name(l));
    if (it == h.antipode.end()) {
      if (missing.empty()) missing = a.name(l);
      continue;
    }
    s[l] = it->second;
  }
  report.add("antipode defined on every generator", missing.empty(), missing);
  if (!missing.empty()) return report;

  auto lift = [&](const NCPoly& x) { return rename_letters(x, a, la_alpha); };
  auto apply_s = [&](const NCPoly& x) {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
      NCPoly acc = NCPoly::scalar(c);
      for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * *s[*it];
      out = out + acc;
    }
    return out;
  };

  const std::size_t n = p.pattern.n();
  std::string left_w, right_w;
  for (const auto& colour : colour_list(p)) {
    auto t = t_matrix(p, colour);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        NCPoly left = NCPoly::scalar(RatFunc(i == j ? 1 : 0));
        NCPoly right = left;
        for (std::size_t k = 0; k < n; ++k) {
          left = left - apply_s(t[i][k]) * lift(t[k][j]);
          right = right - lift(t[i][k]) * apply_s(t[k][j]);
        }
        std::string cell = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        NCPoly l = la.cleared_normal_form(left);
        if (!l.is_zero() && left_w.empty()) left_w = "S(T)T - 1 at " + cell + ": " + text(l, la_alpha);
        NCPoly r = la.cleared_normal_form(right);
        if (!r.is_zero() && right_w.empty()) right_w = "T S(T) - 1 at " + cell + ": " + text(r, la_alpha);
      }
  }
  report.add("m(S (x) id)Delta = epsilon", left_w.empty(), left_w);
  report.add("m(id (x) S)Delta = epsilon", right_w.empty(), right_w);

  std::string anti;
  for (const auto& rel : independent_relations(p.relations)) {
    NCPoly r = la.cleared_normal_form(apply_s(rel));
    if (!r.is_zero()) {
      anti = text(rel, a) + " maps to " + text(r, la_alpha);
      break;
    }
  }
  report.add("antipode is an antihomomorphism", anti.empty(), anti);
  return report;
}

HopfReport check_quotient(const Presentation& source, const std::vector<std::string>& kill,
                          const Presentation& target, bool compare_relations) {
  HopfReport report;
  const Alphabet& a = source.alphabet;
  std::set<std::string> killed(kill.begin(), kill.end());
  for (const auto& g : kill) a.at(g);

  if (compare_relations) {
    std::string witness;
    std::vector<std::optional<NCPoly>> images(a.size());
    for (Letter l = 0; l < a.size(); ++l) {
      if (killed.count(a.name(l))) {
        images[l] = NCPoly();
      } else if (auto t = target.alphabet.find(a.name(l))) {
        images[l] = NCPoly::letter(*t);
      } else if (witness.empty()) {
        witness = "generator " + a.name(l) + " is missing from " + target.name;
      }
    }
    if (witness.empty()) {
      std::vector<NCPoly> mapped;
      for (const auto& rel : source.relations) {
        NCPoly x = rel.apply_letter_map(images);
        if (!x.is_zero()) mapped.push_back(std::move(x));
      }
      auto x = independent_relations(mapped);
      auto y = independent_relations(target.relations);
      for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        if (i < x.size() && i < y.size() && x[i] == y[i]) continue;
        witness = i < x.size() ? "quotient relation " + text(x[i], target.alphabet)
                               : "target relation " + text(y[i], target.alphabet);
        break;
      }
    }
    report.add("relations", witness.empty(), witness);
  }

  std::vector<std::string> ks(kill.begin(), kill.end());
  bool same_pattern = source.pattern.with_zeros(ks) == target.pattern;
  report.add("pattern", same_pattern, same_pattern ? "" : "patterns differ");

  const std::size_t n = source.pattern.n();
  auto dead = [&](std::size_t i, std::size_t j) {
    const auto& c = source.pattern.cell(i, j);
    if (c.kind == PatternCell::Kind::Zero) return true;
    return c.kind == PatternCell::Kind::Generator && killed.count(source.pattern.generator(i, j)) > 0;
  };
  std::string coideal;
  for (std::size_t i = 0; i < n && coideal.empty(); ++i)
    for (std::size_t j = 0; j < n && coideal.empty(); ++j) {
      if (source.pattern.cell(i, j).kind != PatternCell::Kind::Generator || !dead(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!dead(i, k) && !dead(k, j)) {
          coideal = "Delta(" + source.pattern.generator(i, j) + ") has the term " + source.pattern.generator(i, k) +
                    " (x) " + source.pattern.generator(k, j);
          break;
        }
    }
  report.add("coideal", coideal.empty(), coideal);
  return report;
}

namespace {

struct HomContext {
  const HomSpec& spec;
  RewriteSystem system;  // localized, specialized source
  Alphabet alpha;
  std::vector<std::optional<NCPoly>> images;  // target letter -> source polynomial

  explicit HomContext(const HomSpec& s) : spec(s) {
    RewriteSystem base = s.source_system.substituted(s.bindings);
    system = s.source.invertible.empty() ? base : localize(base, s.source.invertible);
    alpha = system.alphabet();
    const Alphabet& ta = s.target.alphabet;
    images.resize(ta.size());
    for (Letter l = 0; l < ta.size(); ++l) {
      auto it = s.images.find(ta.name(l));
      if (it == s.images.end()) throw SchemaError("no image for generator " + ta.name(l));
      NCPoly x = NCPoly::scalar(RatFunc(1));
      if (!it->second.power.empty()) {
        std::string g = s.N < 0 ? inverse_name(it->second.power) : it->second.power;
        NCPoly step = NCPoly::letter(alpha.at(g));
        for (int i = 0; i < std::abs(s.N); ++i) x = x * step;
      }
      if (!it->second.base.empty()) x = x * NCPoly::letter(alpha.at(it->second.base));
      images[l] = std::move(x);
    }
  }

  NCPoly map(const NCPoly& x) const { return system.normal_form(x.substitute(spec.bindings).apply_letter_map(images)); }
};

}  // namespace

HopfReport check_hom(const HomSpec& spec) {
  HopfReport report;
  HomContext ctx(spec);
  const Presentation& tgt = spec.target;

  for (const auto& rel : independent_relations(tgt.relations)) {
    NCPoly r = ctx.map(rel);
    report.add(text(rel, tgt.alphabet), r.is_zero(), text(r, ctx.alpha));
  }

  const Alphabet& sa = ctx.alpha;
  const std::size_t m = sa.size();
  auto src_delta = coproduct_map(spec.source, sa);
  auto src_eps = counit_map(spec.source, sa);
  RewriteSystem sq = tensor_square(ctx.system);
  Alphabet sq_alpha = square_alphabet(sa);
  const std::size_t n = tgt.pattern.n();

  // Delta(F(t)) and (F (x) F)(Delta t) for each target generator t.
  std::map<Letter, std::pair<NCPoly, NCPoly>> deltas;
  std::string one, counit;
  for (const auto& colour : colour_list(tgt)) {
    auto t = t_matrix(tgt, colour);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string g = tgt.pattern.generator(i, j, colour);
        if (g.empty()) continue;
        Letter gl = tgt.alphabet.at(g);
        NCPoly image = *ctx.images[gl];
        NCPoly lhs = image.apply_letter_map(src_delta);
        NCPoly rhs;
        for (std::size_t k = 0; k < n; ++k)
          rhs = rhs + factor(ctx.map(t[i][k]), m, 1) * factor(ctx.map(t[k][j]), m, 2);
        NCPoly diff = sq.normal_form(lhs - rhs);
        if (!diff.is_zero() && one.empty()) one = g + ": " + text(diff, sq_alpha);
        deltas[gl] = {lhs, rhs};
        NCPoly e = image.apply_letter_map(src_eps);
        if (!(e == NCPoly::scalar(RatFunc(i == j ? 1 : 0))) && counit.empty()) counit = g;
      }
  }
  report.add(tgt.is_coloured() ? "coproduct compatible (one colour)" : "coproduct compatible", one.empty(), one);
  report.add("counit compatible", counit.empty(), counit);

  if (tgt.is_coloured()) {
    auto colours = letter_colours(tgt, tgt.alphabet);
    std::string both;
    for (const auto& [x, dx] : deltas) {
      for (const auto& [y, dy] : deltas) {
        if (colours[x] < 0 || colours[y] < 0 || colours[x] == colours[y]) continue;
        NCPoly diff = sq.normal_form(dx.first * dy.first - dx.second * dy.second);
        if (!diff.is_zero()) {
          both = tgt.alphabet.name(x) + "." + tgt.alphabet.name(y) + ": " + text(diff, sq_alpha);
          break;
        }
      }
      if (!both.empty()) break;
    }
    report.add("coproduct compatible (both colours)", both.empty(), both);
  }
  return report;
}

CheckLine exponent_correspondence(const Bindings& multiplicative, const Bindings& additive,
                                  const std::vector<std::pair<std::string, std::string>>& params,
                                  const std::vector<std::pair<std::string, std::string>>& variables) {
  CheckLine line{"exponent correspondence", true, {}};
  auto fail = [&](std::string w) {
    if (line.pass) line.witness = std::move(w);
    line.pass = false;
  };
  for (const auto& [mp, ap] : params) {
    auto mi = multiplicative.find(mp);
    auto ai = additive.find(ap);
    if (mi == multiplicative.end() || ai == additive.end()) {
      fail("missing binding for " + mp + " or " + ap);
      continue;
    }
    const RatFunc& mv = mi->second;
    const RatFunc& av = ai->second;
    if (!mv.is_laurent_monomial() || mv.num().terms().front().coef != 1) {
      fail(mp + " = " + mv.to_string() + " is not a monomial");
      continue;
    }
    RatFunc rebuilt(0);
    Bindings zero;
    for (const auto& [mv_name, av_name] : variables) zero[av_name] = RatFunc(0);
    for (const auto& [mv_name, av_name] : variables) {
      int e = mv.depends_on(mv_name) ? mv.laurent_exponent(mv_name) : 0;
      Bindings at = zero;
      at[av_name] = RatFunc(1);
      RatFunc coef = av.substitute(at);
      if (!(coef == RatFunc(e))) {
        fail(mp + " has exponent " + std::to_string(e) + " in " + mv_name + " but " + ap + " has coefficient " +
             coef.to_string() + " on " + av_name);
      }
      rebuilt += RatFunc(e) * RatFunc::symbol(av_name);
    }
    if (!(rebuilt == av)) fail(ap + " = " + av.to_string() + " is not linear in the variables");
  }
  return line;
}

}  // namespace qdeform
