#include "qdeform/ncalg/presentation.hpp"

#include <algorithm>

#include "qdeform/errors.hpp"

namespace qdeform {

ParamSetPtr Presentation::params() const {
  ParamSetPtr p = ParamSet::empty();
  for (const auto& r : relations)
    for (const auto& [w, c] : r.terms()) p = union_of(p, c.params());
  return p;
}

std::vector<NCPoly> independent_relations(const std::vector<NCPoly>& relations) {
  std::vector<NCPoly> pivots;
  for (const auto& rel : relations) {
    NCPoly r = rel;
    // Reduce by existing pivots until no pivot word remains.
    for (bool changed = true; changed && !r.is_zero();) {
      changed = false;
      for (const auto& p : pivots) {
        RatFunc c = r.coefficient(p.leading_word());
        if (c.is_zero()) continue;
        r = r - p.scaled(c);
        changed = true;
      }
    }
    if (r.is_zero()) continue;
    r = r.scaled(RatFunc(1) / r.leading_coef());
    for (auto& p : pivots) {
      RatFunc c = p.coefficient(r.leading_word());
      if (!c.is_zero()) p = p - r.scaled(c);
    }
    pivots.push_back(std::move(r));
  }
  std::sort(pivots.begin(), pivots.end(),
            [](const NCPoly& a, const NCPoly& b) { return DegLexLess()(a.leading_word(), b.leading_word()); });
  return pivots;
}

namespace {

void require_pattern_size(const SymMatrix& r, const TPattern& t) {
  std::size_t n = local_dimension(r);
  if (n != t.n()) throw DimensionMismatch("R-matrix and T-pattern sizes differ");
}

std::vector<NCPoly> rtt_equations(const SymMatrix& r, const TPattern& t, const Alphabet& alphabet,
                                  const ColourGroup& c1, const ColourGroup& c2) {
  require_pattern_size(r, t);
  const std::size_t n = t.n();
  std::vector<std::vector<NCPoly>> t1(n, std::vector<NCPoly>(n)), t2 = t1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t1[i][j] = t.entry(i, j, alphabet, c1);
      t2[i][j] = t.entry(i, j, alphabet, c2);
    }
  std::vector<NCPoly> eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          NCPoly e;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              const RatFunc& left = r(i * n + j, k * n + l);
              if (!left.is_zero()) e = e + (t1[k][u] * t2[l][v]).scaled(left);
              const RatFunc& right = r(k * n + l, u * n + v);
              if (!right.is_zero()) e = e - (t2[j][l] * t1[i][k]).scaled(right);
            }
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }
  return eqs;
}

}  // namespace

std::vector<NCPoly> rtt_relations(const SymMatrix& r, const TPattern& t, const Alphabet& alphabet,
                                  const ColourGroup& c1, const ColourGroup& c2) {
  return independent_relations(rtt_equations(r, t, alphabet, c1, c2));
}

std::vector<NCPoly> coloured_rtt_relations(const ColouredFamily& fam, const TPattern& t, const Alphabet& alphabet,
                                           const std::vector<ColourGroup>& colours) {
  std::vector<NCPoly> all;
  for (const auto& x : colours)
    for (const auto& y : colours) {
      auto eqs = rtt_equations(fam.instantiate(x, y), t, alphabet, x, y);
      all.insert(all.end(), eqs.begin(), eqs.end());
    }
  return independent_relations(all);
}

RewriteSystem build_rewrite_system(const Presentation& p, bool require_confluent) {
  RewriteSystem rs = orient_relations(p.alphabet, independent_relations(p.relations));
  if (require_confluent) {
    auto report = check_confluence(rs);
    if (!report.confluent) {
      const auto& f = report.failures.front();
      std::string w;
      for (std::size_t i = 0; i < f.overlap.size(); ++i) w += (i ? "." : "") + p.alphabet.name(f.overlap[i]);
      throw NotConfluent(p.name + ": overlap " + w + " resolves to " + f.left.to_string(p.alphabet) + " and " +
                         f.right.to_string(p.alphabet));
    }
  }
  return rs;
}

NCPoly rename_letters(const NCPoly& x, const Alphabet& from, const Alphabet& to) {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    Word v;
    for (Letter l : w) v.push_back(to.at(from.name(l)));
    out.add_term(v, c);
  }
  return out;
}

Presentation restrict_subalgebra(const Presentation& p, const std::vector<std::string>& keep) {
  std::vector<bool> kept(p.alphabet.size(), false);
  for (const auto& g : keep) kept[p.alphabet.at(g)] = true;
  auto only_kept = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](Letter l) { return kept[l]; });
  };
  std::vector<std::string> names;
  for (Letter l = 0; l < p.alphabet.size(); ++l)
    if (kept[l]) names.push_back(p.alphabet.name(l));
  Presentation out;
  out.name = p.name + "|" ;
  for (std::size_t i = 0; i < names.size(); ++i) out.name += (i ? "," : "") + names[i];
  out.alphabet = Alphabet(names);
  out.colours = p.colours;
  for (const auto& rel : independent_relations(p.relations)) {
    if (!only_kept(rel.leading_word())) continue;
    for (const auto& [w, c] : rel.terms()) {
      if (!only_kept(w)) {
        throw NotASubalgebra("relation " + rel.to_string(p.alphabet) +
                             " rewrites a product of kept generators into dropped ones");
      }
    }
    out.relations.push_back(rename_letters(rel, p.alphabet, out.alphabet));
  }
  for (const auto& g : p.invertible)
    if (std::find(keep.begin(), keep.end(), g) != keep.end()) out.invertible.push_back(g);

  const std::size_t n = p.pattern.n();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        const auto& cell = p.pattern.cell(a, b);
        if (cell.kind == PatternCell::Kind::Generator && !cell.coloured &&
            std::find(keep.begin(), keep.end(), cell.base) != keep.end())
          any = true;
      }
    }
    if (any) idx.push_back(i);
  }
  std::vector<std::vector<PatternCell>> cells;
  for (std::size_t i : idx) {
    std::vector<PatternCell> row;
    for (std::size_t j : idx) {
      PatternCell c = p.pattern.cell(i, j);
      if (c.kind == PatternCell::Kind::Generator && std::find(keep.begin(), keep.end(), c.base) == keep.end())
        c = PatternCell{};
      row.push_back(c);
    }
    cells.push_back(std::move(row));
  }
  out.pattern = TPattern(std::move(cells));
  return out;
}

bool same_relations(const Presentation& a, const Presentation& b, const Bindings& b_bindings, std::string* witness) {
  std::vector<NCPoly> mapped;
  for (const auto& rel : b.relations) {
    for (const auto& l : rel.letters()) {
      if (!a.alphabet.find(b.alphabet.name(l))) {
        if (witness) *witness = "generator " + b.alphabet.name(l) + " is missing";
        return false;
      }
    }
    mapped.push_back(rename_letters(rel, b.alphabet, a.alphabet).substitute(b_bindings));
  }
  auto x = independent_relations(a.relations);
  auto y = independent_relations(mapped);
  for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
    if (i >= x.size() || i >= y.size() || !(x[i] == y[i])) {
      if (witness) {
        *witness = i < x.size() ? x[i].to_string(a.alphabet) : y[i].to_string(a.alphabet);
      }
      return false;
    }
  }
  return true;
}

NCPoly abelianize(const NCPoly& x) {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    Word v = w;
    std::sort(v.begin(), v.end());
    out.add_term(v, c);
  }
  return out;
}

}  // namespace qdeform
