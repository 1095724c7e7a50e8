#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qdeform {

using Exponents = std::vector<int>;

struct Term {
  Exponents exp;
  mpq_class coef;
};

/// Sparse multivariate polynomial over Q with nonnegative exponents.
///
/// Variables are positional; the owning RatFunc supplies their names. Terms
/// are sorted in strictly decreasing lex order of their exponent vectors and
/// never carry a zero coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const mpq_class& c);

  static Poly monomial(std::size_t nvars, Exponents exp, const mpq_class& c = 1);
  static Poly variable(std::size_t nvars, std::size_t var);
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const mpq_class& leading_coef() const { return terms_.front().coef; }
  const Exponents& leading_exp() const { return terms_.front().exp; }
  mpq_class constant_value() const;

  int degree_in(std::size_t var) const;
  /// Coefficients with respect to `var`: degree -> polynomial free of `var`.
  std::map<int, Poly> coefficients_in(std::size_t var) const;
  /// Componentwise minimum exponent over all terms (zero polynomial: all 0).
  Exponents min_exponents() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly shifted(const Exponents& by) const;
  /// Divides every exponent vector by `by`; requires divisibility.
  Poly unshifted(const Exponents& by) const;
  Poly monic() const;
  Poly pow(unsigned n) const;

  /// Re-expresses the polynomial over `new_nvars` variables where old
  /// variable i becomes variable index_map[i]. The map must be strictly
  /// increasing, which keeps the term order intact.
  Poly remapped(std::size_t new_nvars, std::span<const std::size_t> index_map) const;

  /// Evaluates with every variable bound.
  mpq_class evaluate(std::span<const mpq_class> values) const;

  bool operator==(const Poly& other) const;

  /// Exact quotient; throws std::logic_error when `d` does not divide.
  friend Poly exact_div(const Poly& a, const Poly& d);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (lc = 1 in lex order). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qdeform
