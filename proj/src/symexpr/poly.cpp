#include "qdeform/symexpr/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qdeform {

namespace {

// Strictly decreasing lex order.
bool term_before(const Term& a, const Term& b) { return a.exp > b.exp; }

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides(const Exponents& d, const Exponents& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (d[i] > a[i]) return false;
  return true;
}

}  // namespace

Poly::Poly(std::size_t nvars, const mpq_class& c) : nvars_(nvars) {
  if (c != 0) terms_.push_back({Exponents(nvars, 0), c});
}

Poly Poly::monomial(std::size_t nvars, Exponents exp, const mpq_class& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({std::move(exp), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
  Exponents e(nvars, 0);
  e[var] = 1;
  return monomial(nvars, std::move(e));
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](int e) { return e == 0; });
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coef == 1; }

mpq_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_[0].coef;
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

std::map<int, Poly> Poly::coefficients_in(std::size_t var) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term c = t;
    c.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(c));
  }
  std::map<int, Poly> out;
  for (auto& [deg, ts] : buckets) out.emplace(deg, from_terms(nvars_, std::move(ts)));
  return out;
}

Exponents Poly::min_exponents() const {
  if (terms_.empty()) return Exponents(nvars_, 0);
  Exponents m = terms_[0].exp;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exp > j->exp)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exp > i->exp) {
      r.terms_.push_back(*j++);
    } else {
      mpq_class c = i->coef + j->coef;
      if (c != 0) r.terms_.push_back({i->exp, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({add_exp(s.exp, t.exp), s.coef * t.coef});
  return Poly::from_terms(a.nvars_, std::move(prod));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::shifted(const Exponents& by) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < nvars_; ++i) t.exp[i] += by[i];
  return r;
}

Poly Poly::unshifted(const Exponents& by) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < nvars_; ++i) {
      t.exp[i] -= by[i];
      if (t.exp[i] < 0) throw std::logic_error("Poly::unshifted: negative exponent");
    }
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_[0].coef == 1) return *this;
  mpq_class inv = 1 / terms_[0].coef;
  return scaled(inv);
}

Poly Poly::pow(unsigned n) const {
  Poly result(nvars_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::remapped(std::size_t new_nvars, std::span<const std::size_t> index_map) const {
  Poly r(new_nvars);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) e[index_map[i]] = t.exp[i];
    r.terms_.push_back({std::move(e), t.coef});
  }
  return r;
}

mpq_class Poly::evaluate(std::span<const mpq_class> values) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.exp[i]; ++k) v *= values[i];
    sum += v;
  }
  return sum;
}

bool Poly::operator==(const Poly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != other.terms_[i].exp || terms_[i].coef != other.terms_[i].coef) return false;
  }
  return true;
}

Poly exact_div(const Poly& a, const Poly& d) {
  if (d.is_zero()) throw std::logic_error("exact_div by zero");
  if (d.is_constant()) return a.scaled(1 / d.constant_value());
  std::vector<Term> quotient;
  Poly rem = a;
  const Term& lead = d.terms_.front();
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    if (!divides(lead.exp, lt.exp)) throw std::logic_error("exact_div: not divisible");
    Exponents e(a.nvars_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lt.exp[i] - lead.exp[i];
    mpq_class c = lt.coef / lead.coef;
    Poly step = Poly::monomial(a.nvars_, e, c);
    quotient.push_back({std::move(e), c});
    rem = rem - step * d;
  }
  return Poly::from_terms(a.nvars_, std::move(quotient));
}

namespace {

Poly gcd_impl(const Poly& a, const Poly& b);

Poly numeric_primitive(const Poly& p) {
  // Scale so the leading coefficient is 1; removes numeric content up to a unit.
  return p.monic();
}

// Content of `p` viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.nvars());
  for (const auto& [deg, c] : p.coefficients_in(var)) {
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return Poly(p.nvars(), 1);
  }
  return g;
}

Poly primitive_in(const Poly& p, std::size_t var) {
  Poly c = content_in(p, var);
  return numeric_primitive(c.is_constant() ? p : exact_div(p, c));
}

// Sparse pseudo-remainder of a by b in `var` (without the trailing lc power).
Poly pseudo_rem(Poly a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  auto bc = b.coefficients_in(var);
  const Poly lcb = bc.rbegin()->second;
  Poly tail(b.nvars());
  for (const auto& [deg, c] : bc) {
    if (deg == db) continue;
    Exponents e(b.nvars(), 0);
    e[var] = deg;
    tail = tail + c.shifted(e);
  }
  while (!a.is_zero()) {
    const int da = a.degree_in(var);
    if (da < db) break;
    auto ac = a.coefficients_in(var);
    const Poly lca = ac.rbegin()->second;
    Poly rest(a.nvars());
    for (const auto& [deg, c] : ac) {
      if (deg == da) continue;
      Exponents e(a.nvars(), 0);
      e[var] = deg;
      rest = rest + c.shifted(e);
    }
    Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    // lcb * a - lca * x^(da-db) * b, with the leading terms cancelling exactly.
    a = lcb * rest - (lca * tail).shifted(shift);
  }
  return a;
}

using UniPoly = std::vector<mpq_class>;  // coefficient of x^i at index i

void trim(UniPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Specializes every variable except `var` at `point`.
UniPoly specialize(const Poly& p, std::size_t var, const std::vector<mpq_class>& point) {
  UniPoly u(p.degree_in(var) + 1, 0);
  for (const auto& t : p.terms()) {
    mpq_class c = t.coef;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (i == var) continue;
      for (int k = 0; k < t.exp[i]; ++k) c *= point[i];
    }
    u[t.exp[var]] += c;
  }
  trim(u);
  return u;
}

std::size_t univariate_gcd_degree(UniPoly a, UniPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      mpq_class f = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on deg_var gcd(a, b) from a specialization that keeps both
// leading coefficients alive; nullopt when no such point was found.
std::optional<std::size_t> gcd_degree_bound(const Poly& a, const Poly& b, std::size_t var) {
  static const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  const std::size_t n = a.nvars();
  const std::size_t da = a.degree_in(var), db = b.degree_in(var);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<mpq_class> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = kPrimes[(i + 5 * attempt) % 15] + attempt;
    UniPoly ua = specialize(a, var, point);
    UniPoly ub = specialize(b, var, point);
    if (ua.size() != da + 1 || ub.size() != db + 1) continue;
    return univariate_gcd_degree(std::move(ua), std::move(ub));
  }
  return std::nullopt;
}

// gcd of polynomials that carry no monomial factor.
Poly gcd_nomono(const Poly& a, const Poly& b) {
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Poly(n, 1);
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_a = a.degree_in(v) > 0;
    const bool in_b = b.degree_in(v) > 0;
    if (in_a == in_b) continue;
    const Poly& with = in_a ? a : b;
    Poly g = in_a ? b : a;
    for (const auto& [deg, c] : with.coefficients_in(v)) {
      g = gcd_impl(g, c);
      if (g.is_constant()) return Poly(n, 1);
    }
    return g;
  }
  std::size_t var = n;
  std::size_t best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (a.degree_in(v) == 0) continue;
    auto bound = gcd_degree_bound(a, b, v);
    if (bound && *bound == 0) return gcd_impl(content_in(a, v), content_in(b, v));
    std::size_t d = bound ? *bound : static_cast<std::size_t>(std::min(a.degree_in(v), b.degree_in(v)));
    if (var == n || d < best) {
      var = v;
      best = d;
    }
  }
  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly c = gcd_impl(ca, cb);
  Poly p = numeric_primitive(exact_div(a, ca));
  Poly q = numeric_primitive(exact_div(b, cb));
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    Poly r = pseudo_rem(p, q, var);
    p = std::move(q);
    if (r.is_zero()) {
      q = Poly(n);
    } else if (r.degree_in(var) == 0) {
      p = Poly(n, 1);
      q = Poly(n);
    } else {
      q = primitive_in(r, var);
    }
  }
  Poly g = p.is_constant() ? Poly(n, 1) : primitive_in(p, var);
  return (c * g).monic();
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(n, 1);
  Exponents ma = a.min_exponents();
  Exponents mb = b.min_exponents();
  Exponents m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = std::min(ma[i], mb[i]);
  Poly g = gcd_nomono(a.unshifted(ma), b.unshifted(mb));
  return g.shifted(m).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

}  // namespace qdeform
