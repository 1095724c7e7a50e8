#include "qdeform/symexpr/ratfunc.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qdeform/errors.hpp"

namespace qdeform {

namespace {

Poly one_poly(std::size_t n) { return Poly(n, 1); }

std::vector<std::size_t> index_map(const ParamSet& from, const ParamSet& to) {
  std::vector<std::size_t> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) map[i] = *to.index_of(from.symbol(i));
  return map;
}

RatFunc make_coprime(const ParamSetPtr& params, Poly num, Poly den);

}  // namespace

RatFunc::RatFunc() : params_(ParamSet::empty()), num_(0), den_(0, 1) {}

RatFunc::RatFunc(long c) : params_(ParamSet::empty()), num_(0, mpq_class(c)), den_(0, 1) {}

RatFunc::RatFunc(const mpq_class& c) : params_(ParamSet::empty()), num_(0, c), den_(0, 1) {}

RatFunc RatFunc::symbol(std::string_view name) {
  return symbol(ParamSet::make({std::string(name)}), name);
}

RatFunc RatFunc::symbol(const ParamSetPtr& params, std::string_view name) {
  auto idx = params->index_of(name);
  if (!idx) throw LookupError("unknown parameter '" + std::string(name) + "'");
  RatFunc x;
  x.params_ = params;
  x.num_ = Poly::variable(params->size(), *idx);
  x.den_ = one_poly(params->size());
  return x;
}

RatFunc RatFunc::from_coprime(const ParamSetPtr& params, Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("division by zero");
  const std::size_t n = params->size();
  RatFunc x;
  x.params_ = params;
  if (num.is_zero()) {
    x.num_ = Poly(n);
    x.den_ = one_poly(n);
    return x;
  }
  mpq_class lc = den.leading_coef();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  return x;
}

namespace {

RatFunc make_coprime(const ParamSetPtr& params, Poly num, Poly den) {
  return RatFunc::from_coprime(params, std::move(num), std::move(den));
}

}  // namespace

RatFunc RatFunc::from_parts(const ParamSetPtr& params, Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("division by zero");
  RatFunc x;
  x.params_ = params;
  const std::size_t n = params->size();
  if (num.is_zero()) {
    x.num_ = Poly(n);
    x.den_ = one_poly(n);
    return x;
  }
  if (den.is_constant()) {
    x.num_ = num.scaled(1 / den.constant_value());
    x.den_ = one_poly(n);
    return x;
  }
  if (den.leading_coef() != 1 || !den.is_monomial() || !num.is_monomial()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  } else {
    Exponents a = num.leading_exp();
    Exponents b = den.leading_exp();
    Exponents m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = std::min(a[i], b[i]);
    num = num.unshifted(m);
    den = den.unshifted(m);
  }
  mpq_class lc = den.leading_coef();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  return x;
}

bool RatFunc::is_one() const { return den_.is_one() && num_.is_one(); }

bool RatFunc::is_constant() const { return den_.is_one() && num_.is_constant(); }

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw LookupError("expression is not a constant: " + to_string());
  return num_.constant_value();
}

int RatFunc::laurent_exponent(std::string_view name) const {
  if (!is_laurent_monomial()) throw LookupError("not a Laurent monomial: " + to_string());
  auto idx = params_->index_of(name);
  if (!idx) return 0;
  return num_.leading_exp()[*idx] - den_.leading_exp()[*idx];
}

std::vector<std::string> RatFunc::free_symbols() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < params_->size(); ++i) {
    if (num_.degree_in(i) > 0 || den_.degree_in(i) > 0) out.push_back(params_->symbol(i));
  }
  return out;
}

bool RatFunc::depends_on(std::string_view name) const {
  auto idx = params_->index_of(name);
  return idx && (num_.degree_in(*idx) > 0 || den_.degree_in(*idx) > 0);
}

RatFunc RatFunc::over(const ParamSetPtr& superset) const {
  if (same_params(params_, superset)) {
    if (params_ == superset) return *this;
    RatFunc x = *this;
    x.params_ = superset;
    return x;
  }
  auto map = index_map(*params_, *superset);
  RatFunc x;
  x.params_ = superset;
  x.num_ = num_.remapped(superset->size(), map);
  x.den_ = den_.remapped(superset->size(), map);
  return x;
}

std::pair<RatFunc, RatFunc> unify(const RatFunc& a, const RatFunc& b) {
  if (a.params() == b.params()) return {a, b};
  ParamSetPtr u = union_of(a.params(), b.params());
  return {a.over(u), b.over(u)};
}

RatFunc RatFunc::operator-() const {
  RatFunc x = *this;
  x.num_ = -num_;
  return x;
}

RatFunc operator+(const RatFunc& a0, const RatFunc& b0) {
  if (a0.is_zero()) return b0;
  if (b0.is_zero()) return a0;
  auto [a, b] = unify(a0, b0);
  const auto& p = a.params_;
  if (a.den_ == b.den_) {
    Poly num = a.num_ + b.num_;
    if (a.den_.is_one()) return make_coprime(p, std::move(num), a.den_);
    return RatFunc::from_parts(p, std::move(num), a.den_);
  }
  if (a.den_.is_one()) return make_coprime(p, a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return make_coprime(p, a.num_ + b.num_ * a.den_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  Poly da = exact_div(a.den_, g);
  Poly db = exact_div(b.den_, g);
  Poly num = a.num_ * db + b.num_ * da;
  Poly den = da * b.den_;
  if (g.is_one()) return make_coprime(p, std::move(num), std::move(den));
  Poly h = gcd(num, g);
  if (!h.is_one()) {
    num = exact_div(num, h);
    den = exact_div(den, h);
  }
  return make_coprime(p, std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a0, const RatFunc& b0) {
  if (a0.is_zero()) return a0;
  if (b0.is_zero()) return b0;
  if (a0.is_one()) return b0;
  if (b0.is_one()) return a0;
  auto [a, b] = unify(a0, b0);
  const auto& p = a.params_;
  if (a.den_.is_one() && b.den_.is_one()) return make_coprime(p, a.num_ * b.num_, a.den_);
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  Poly g1 = gcd(an, bd);
  if (!g1.is_one()) {
    an = exact_div(an, g1);
    bd = exact_div(bd, g1);
  }
  Poly g2 = gcd(bn, ad);
  if (!g2.is_one()) {
    bn = exact_div(bn, g2);
    ad = exact_div(ad, g2);
  }
  return make_coprime(p, an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  return a * make_coprime(b.params_, b.den_, b.num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n == 0) return RatFunc(1).over(params_);
  if (n < 0) return RatFunc(1) / pow(-n);
  RatFunc x;
  x.params_ = params_;
  x.num_ = num_.pow(static_cast<unsigned>(n));
  x.den_ = den_.pow(static_cast<unsigned>(n));
  return x;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.params_ == b.params_ || *a.params_ == *b.params_) return a.num_ == b.num_ && a.den_ == b.den_;
  auto [x, y] = unify(a, b);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

namespace {

struct Evaluator {
  const ParamSet& params;
  std::vector<std::optional<RatFunc>> values;
  std::vector<std::vector<RatFunc>> powers;

  const RatFunc& power(std::size_t var, int e) {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(RatFunc(1).over(values[var]->params()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *values[var]);
    return cache[e];
  }

  RatFunc eval(const Poly& p, const ParamSetPtr& target) {
    RatFunc sum = RatFunc(0).over(target);
    for (const auto& t : p.terms()) {
      RatFunc term = RatFunc(t.coef).over(target);
      for (std::size_t v = 0; v < t.exp.size(); ++v) {
        if (t.exp[v] > 0) term = term * power(v, t.exp[v]);
      }
      sum = sum + term;
    }
    return sum;
  }
};

}  // namespace

namespace {

// Remaining parameters of x plus everything the bound values mention.
ParamSetPtr substituted_params(const RatFunc& x, const Bindings& bindings) {
  std::vector<std::string> syms;
  for (const auto& s : x.params()->symbols())
    if (!bindings.count(s)) syms.push_back(s);
  for (const auto& [name, value] : bindings) {
    if (!x.params()->contains(name)) continue;
    for (const auto& s : value.params()->symbols()) syms.push_back(s);
  }
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  ParamSetPtr p = ParamSet::make(std::move(syms));
  return same_params(p, x.params()) ? x.params() : p;
}

Evaluator make_evaluator(const RatFunc& x, const Bindings& bindings, const ParamSetPtr& target) {
  const ParamSet& ps = *x.params();
  Evaluator ev{ps, std::vector<std::optional<RatFunc>>(ps.size()),
               std::vector<std::vector<RatFunc>>(ps.size())};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto it = bindings.find(ps.symbol(i));
    ev.values[i] = (it != bindings.end()) ? it->second.over(union_of(it->second.params(), target))
                                          : RatFunc::symbol(target, ps.symbol(i));
  }
  return ev;
}

}  // namespace

RatFunc RatFunc::substitute(const Bindings& bindings) const {
  bool any = false;
  for (const auto& [name, value] : bindings) {
    if (depends_on(name)) {
      any = true;
      break;
    }
  }
  if (!any) return *this;
  ParamSetPtr target = substituted_params(*this, bindings);
  Evaluator ev = make_evaluator(*this, bindings, target);
  RatFunc d = ev.eval(den_, target);
  if (d.is_zero()) {
    throw SingularSubstitution("denominator " + RatFunc::from_parts(params_, den_, one_poly(params_->size())).to_string() +
                               " vanishes under substitution");
  }
  RatFunc n = ev.eval(num_, target);
  return (n / d).over(target);
}

RatFunc RatFunc::limit(std::string_view name, const mpq_class& value) const {
  if (!params_->contains(name)) throw LookupError("unknown limit parameter '" + std::string(name) + "'");
  Bindings b{{std::string(name), RatFunc(value)}};
  if (!depends_on(name)) return *this;
  ParamSetPtr target = substituted_params(*this, b);
  Evaluator ev = make_evaluator(*this, b, target);
  RatFunc d = ev.eval(den_, target);
  if (d.is_zero()) {
    std::ostringstream os;
    os << "limit " << name << " -> " << value.get_str() << " of " << to_string() << " does not exist";
    throw SingularLimit(os.str());
  }
  return ev.eval(num_, target) / d;
}

mpq_class RatFunc::evaluate(const RationalPoint& point) const {
  std::vector<mpq_class> vals(params_->size(), 0);
  for (std::size_t i = 0; i < params_->size(); ++i) {
    auto it = point.find(params_->symbol(i));
    if (it != point.end()) {
      vals[i] = it->second;
    } else if (num_.degree_in(i) > 0 || den_.degree_in(i) > 0) {
      throw LookupError("no value for parameter '" + params_->symbol(i) + "'");
    }
  }
  mpq_class d = den_.evaluate(vals);
  if (d == 0) throw DivisionByZero("pole at evaluation point");
  return num_.evaluate(vals) / d;
}

namespace {

void append_poly(std::ostringstream& os, const ParamSet& ps, const Poly& p, const Exponents& shift) {
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coef;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    bool has_var = false;
    for (std::size_t v = 0; v < t.exp.size(); ++v)
      if (t.exp[v] - shift[v] != 0) has_var = true;
    if (c != 1 || !has_var) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < t.exp.size(); ++v) {
      int e = t.exp[v] - shift[v];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << ps.symbol(v);
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
}

}  // namespace

std::string RatFunc::to_string() const {
  if (num_.is_zero()) return "0";
  std::ostringstream os;
  Exponents m = den_.min_exponents();
  Poly rest = den_.unshifted(m);
  if (rest.is_one()) {
    append_poly(os, *params_, num_, m);
  } else {
    Exponents zero(m.size(), 0);
    os << '(';
    append_poly(os, *params_, num_, m);
    os << ")/(";
    append_poly(os, *params_, rest, zero);
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

}  // namespace qdeform
