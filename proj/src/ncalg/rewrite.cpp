#include "qdeform/ncalg/rewrite.hpp"

#include <algorithm>

#include "qdeform/errors.hpp"
#include "qdeform/tensor/sym_matrix.hpp"

namespace qdeform {

namespace {

std::string word_text(const Word& w, const Alphabet& a) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += a.name(w[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  const std::size_t n = alphabet_.size();
  table_.assign(n * n, -1);
  DegLexLess less;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.lhs.size() != 2) throw NotOrientable("rule lhs " + word_text(r.lhs, alphabet_) + " is not a two-letter word");
    int& slot = table_[r.lhs[0] * n + r.lhs[1]];
    if (slot >= 0) throw NotOrientable("two rules share the lhs " + word_text(r.lhs, alphabet_));
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!less(w, r.lhs)) {
        throw NotOrientable("rule " + word_text(r.lhs, alphabet_) + " -> " + r.rhs.to_string(alphabet_) +
                            " does not decrease in deg-lex order");
      }
    }
    slot = static_cast<int>(i);
  }
}

const Rule* RewriteSystem::rule_for(Letter x, Letter y) const {
  int idx = table_[x * alphabet_.size() + y];
  return idx < 0 ? nullptr : &rules_[idx];
}

std::optional<std::size_t> RewriteSystem::first_redex(const Word& w) const {
  const std::size_t n = alphabet_.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (table_[w[i] * n + w[i + 1]] >= 0) return i;
  return std::nullopt;
}

NCPoly RewriteSystem::rewrite_at(const Word& w, std::size_t pos) const {
  const Rule* r = rule_for(w[pos], w[pos + 1]);
  NCPoly out;
  for (const auto& [v, c] : r->rhs.terms()) {
    Word x(w.begin(), w.begin() + static_cast<long>(pos));
    x.insert(x.end(), v.begin(), v.end());
    x.insert(x.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
    out.add_term(x, c);
  }
  return out;
}

NCPoly RewriteSystem::normal_form(const NCPoly& x) const {
  // Every rewrite only produces deg-lex smaller words, so processing the
  // largest pending word first never revisits a finished word.
  NCPoly::Terms work = x.terms();
  NCPoly done;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    RatFunc c = std::move(it->second);
    work.erase(it);
    auto pos = first_redex(w);
    if (!pos) {
      done.add_term(w, c);
      continue;
    }
    const Rule* r = rule_for(w[*pos], w[*pos + 1]);
    for (const auto& [v, d] : r->rhs.terms()) {
      Word y(w.begin(), w.begin() + static_cast<long>(*pos));
      y.insert(y.end(), v.begin(), v.end());
      y.insert(y.end(), w.begin() + static_cast<long>(*pos) + 2, w.end());
      RatFunc e = c * d;
      auto [jt, inserted] = work.emplace(std::move(y), e);
      if (!inserted) {
        jt->second += e;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return done;
}

RewriteSystem RewriteSystem::substituted(const Bindings& b) const {
  std::vector<Rule> rules;
  for (const auto& r : rules_) rules.push_back({r.lhs, r.rhs.substitute(b)});
  return RewriteSystem(alphabet_, std::move(rules));
}

std::vector<NCPoly> RewriteSystem::relations() const {
  std::vector<NCPoly> out;
  for (const auto& r : rules_) out.push_back(NCPoly::word(r.lhs) - r.rhs);
  return out;
}

ConfluenceReport check_confluence(const RewriteSystem& rs) {
  ConfluenceReport report;
  const std::size_t n = rs.alphabet().size();
  for (const auto& r1 : rs.rules()) {
    for (Letter z = 0; z < n; ++z) {
      if (!rs.rule_for(r1.lhs[1], z)) continue;
      Word w{r1.lhs[0], r1.lhs[1], z};
      ++report.overlaps;
      NCPoly left = rs.normal_form(rs.rewrite_at(w, 0));
      NCPoly right = rs.normal_form(rs.rewrite_at(w, 1));
      if (!(left == right)) {
        report.confluent = false;
        report.failures.push_back({w, std::move(left), std::move(right)});
      }
    }
  }
  return report;
}

NCPoly normal_form_by(const RewriteSystem& rs, NCPoly x, const RedexChooser& choose) {
  while (true) {
    const Word* target = nullptr;
    std::vector<std::size_t> redexes;
    for (auto it = x.terms().rbegin(); it != x.terms().rend() && !target; ++it) {
      const Word& w = it->first;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rs.rule_for(w[i], w[i + 1])) redexes.push_back(i);
      if (!redexes.empty()) target = &w;
    }
    if (!target) return x;
    Word w = *target;
    RatFunc c = x.coefficient(w);
    std::size_t pos = choose(w, redexes);
    x = x - NCPoly::word(w, c) + rs.rewrite_at(w, pos).scaled(c);
  }
}

RewriteSystem orient_relations(const Alphabet& alphabet, const std::vector<NCPoly>& relations) {
  std::vector<Rule> rules;
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    const Word& lead = rel.leading_word();
    if (lead.size() != 2) {
      throw NotOrientable("relation " + rel.to_string(alphabet) + " has leading word " + word_text(lead, alphabet) +
                          " of degree " + std::to_string(lead.size()));
    }
    RatFunc c = rel.leading_coef();
    NCPoly rest = rel - NCPoly::word(lead, c);
    rules.push_back({lead, (-rest).scaled(RatFunc(1) / c)});
  }
  return RewriteSystem(alphabet, std::move(rules));
}

std::string inverse_name(const std::string& generator) { return generator + "^-1"; }

namespace {

// Expresses target as sum_y phi_y * basis[y]; basis vectors are NCPolys.
std::optional<std::vector<RatFunc>> solve_in_span(const std::vector<NCPoly>& basis, const NCPoly& target) {
  struct Row {
    NCPoly v;
    std::vector<RatFunc> combo;
  };
  std::vector<Row> pivots;
  const std::size_t m = basis.size();
  for (std::size_t y = 0; y < m; ++y) {
    Row row{basis[y], std::vector<RatFunc>(m)};
    row.combo[y] = RatFunc(1);
    for (const auto& p : pivots) {
      RatFunc c = row.v.coefficient(p.v.leading_word());
      if (c.is_zero()) continue;
      row.v = row.v - p.v.scaled(c);
      for (std::size_t k = 0; k < m; ++k) row.combo[k] -= c * p.combo[k];
    }
    if (row.v.is_zero()) continue;
    RatFunc inv = RatFunc(1) / row.v.leading_coef();
    row.v = row.v.scaled(inv);
    for (auto& x : row.combo) x *= inv;
    for (auto& p : pivots) {
      RatFunc c = p.v.coefficient(row.v.leading_word());
      if (c.is_zero()) continue;
      p.v = p.v - row.v.scaled(c);
      for (std::size_t k = 0; k < m; ++k) p.combo[k] -= c * row.combo[k];
    }
    pivots.push_back(std::move(row));
  }
  NCPoly rest = target;
  std::vector<RatFunc> coeffs(m);
  for (const auto& p : pivots) {
    RatFunc c = rest.coefficient(p.v.leading_word());
    if (c.is_zero()) continue;
    rest = rest - p.v.scaled(c);
    for (std::size_t k = 0; k < m; ++k) coeffs[k] += c * p.combo[k];
  }
  if (!rest.is_zero()) return std::nullopt;
  return coeffs;
}

}  // namespace

Alphabet localized_alphabet(const Alphabet& base, const std::vector<std::string>& invertible) {
  std::vector<std::string> names;
  for (const auto& x : base.names()) {
    names.push_back(x);
    if (std::find(invertible.begin(), invertible.end(), x) != invertible.end()) names.push_back(inverse_name(x));
  }
  for (const auto& g : invertible) base.at(g);
  return Alphabet(std::move(names));
}

RewriteSystem localize(const RewriteSystem& rs, const std::vector<std::string>& invertible) {
  const Alphabet& base = rs.alphabet();
  const std::size_t n = base.size();
  Alphabet alpha = localized_alphabet(base, invertible);
  auto lift = [&](Letter x) { return alpha.at(base.name(x)); };
  auto lift_poly = [&](const NCPoly& x) {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
      Word v;
      for (Letter l : w) v.push_back(lift(l));
      out.add_term(v, c);
    }
    return out;
  };
  std::vector<Rule> rules;
  for (const auto& r : rs.rules()) rules.push_back({lift_poly(NCPoly::word(r.lhs)).leading_word(), lift_poly(r.rhs)});

  std::vector<Letter> gens;
  for (const auto& g : invertible) gens.push_back(base.at(g));

  // phi[g][x] = g x g^-1 and psi[g][x] = g^-1 x g as combinations of letters.
  std::vector<std::vector<NCPoly>> phi(gens.size()), psi(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Letter g = gens[gi];
    std::vector<Letter> others;
    for (Letter x = 0; x < n; ++x)
      if (x != g) others.push_back(x);
    std::vector<NCPoly> right;  // y g in normal form
    for (Letter y : others) right.push_back(rs.normal_form(NCPoly::word({y, g})));
    const std::size_t m = others.size();
    SymMatrix fwd(m, m);
    for (std::size_t xi = 0; xi < m; ++xi) {
      auto sol = solve_in_span(right, rs.normal_form(NCPoly::word({g, others[xi]})));
      if (!sol) {
        throw NotOrientable("generator " + base.name(g) + " does not normalize " + base.name(others[xi]));
      }
      for (std::size_t yi = 0; yi < m; ++yi) fwd(xi, yi) = (*sol)[yi];
    }
    SymMatrix inv;
    try {
      inv = mat_inverse(fwd);
    } catch (const SingularMatrix&) {
      throw NotOrientable("conjugation by " + base.name(g) + " is not invertible");
    }
    phi[gi].assign(n, NCPoly());
    psi[gi].assign(n, NCPoly());
    for (std::size_t xi = 0; xi < m; ++xi)
      for (std::size_t yi = 0; yi < m; ++yi) {
        phi[gi][others[xi]].add_term({lift(others[yi])}, fwd(xi, yi));
        psi[gi][others[xi]].add_term({lift(others[yi])}, inv(xi, yi));
      }
  }

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Letter g = lift(gens[gi]);
    Letter gin = alpha.at(inverse_name(invertible[gi]));
    rules.push_back({Word{g, gin}, NCPoly::scalar(RatFunc(1))});
    rules.push_back({Word{gin, g}, NCPoly::scalar(RatFunc(1))});
    for (Letter x = 0; x < n; ++x) {
      if (x == gens[gi]) continue;
      Letter lx = lift(x);
      NCPoly rhs;
      if (lx < g) {
        // g^-1 x = psi(x) g^-1
        for (const auto& [w, c] : psi[gi][x].terms()) rhs.add_term({w[0], gin}, c);
        rules.push_back({Word{gin, lx}, rhs});
      } else {
        // x g^-1 = g^-1 phi(x)
        for (const auto& [w, c] : phi[gi][x].terms()) rhs.add_term({gin, w[0]}, c);
        rules.push_back({Word{lx, gin}, rhs});
      }
    }
    // g^-1 h = c h g^-1 gives g^-1 h^-1 = c^-1 h^-1 g^-1.
    for (std::size_t hi = 0; hi < gi; ++hi) {
      const NCPoly& img = psi[gi][gens[hi]];
      Letter h = lift(gens[hi]);
      if (img.size() != 1 || img.leading_word() != Word{h}) {
        throw NotOrientable("inverses of " + base.name(gens[gi]) + " and " + base.name(gens[hi]) +
                            " do not q-commute");
      }
      Letter hin = alpha.at(inverse_name(invertible[hi]));
      RatFunc c = RatFunc(1) / img.leading_coef();
      if (hin < gin) {
        rules.push_back({Word{gin, hin}, NCPoly::word({hin, gin}, c)});
      } else {
        rules.push_back({Word{hin, gin}, NCPoly::word({gin, hin}, RatFunc(1) / c)});
      }
    }
  }
  return RewriteSystem(alpha, std::move(rules));
}

RewriteSystem tensor_square(const RewriteSystem& rs) {
  const Alphabet& a = rs.alphabet();
  const std::size_t n = a.size();
  std::vector<std::string> names;
  for (const auto& x : a.names()) names.push_back(x + "@1");
  for (const auto& x : a.names()) names.push_back(x + "@2");
  std::vector<Rule> rules;
  for (int f = 1; f <= 2; ++f)
    for (const auto& r : rs.rules())
      rules.push_back({into_factor(NCPoly::word(r.lhs), n, f).leading_word(), into_factor(r.rhs, n, f)});
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y)
      rules.push_back({Word{static_cast<Letter>(n + x), y}, NCPoly::word({y, static_cast<Letter>(n + x)})});
  return RewriteSystem(Alphabet(std::move(names)), std::move(rules));
}

NCPoly into_factor(const NCPoly& x, std::size_t alphabet_size, int factor) {
  if (factor == 1) return x;
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    Word v = w;
    for (auto& l : v) l = static_cast<Letter>(l + alphabet_size);
    out.add_term(v, c);
  }
  return out;
}

}  // namespace qdeform
