#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "qdeform/symexpr/param_set.hpp"
#include "qdeform/symexpr/poly.hpp"

namespace qdeform {

class RatFunc;
using Bindings = std::map<std::string, RatFunc>;
using RationalPoint = std::map<std::string, mpq_class>;

/// Exact multivariate Laurent rational function over Q.
///
/// Stored as num/den with num, den ordinary polynomials, gcd(num, den) = 1
/// and den monic in lex order. Negative powers live in den as a monomial
/// factor. Zero is 0/1. Equal values have identical representations over
/// the same ParamSet; values are immutable.
class RatFunc {
 public:
  RatFunc();
  RatFunc(long c);  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static RatFunc symbol(std::string_view name);
  static RatFunc symbol(const ParamSetPtr& params, std::string_view name);
  /// Builds num/den and normalizes. Throws DivisionByZero if den is zero.
  static RatFunc from_parts(const ParamSetPtr& params, Poly num, Poly den);
  /// Like from_parts for operands already known to be coprime; only the
  /// leading coefficient of den is normalized.
  static RatFunc from_coprime(const ParamSetPtr& params, Poly num, Poly den);

  const ParamSetPtr& params() const { return params_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_polynomial() const { return den_.is_one(); }
  /// num/den with den a monomial: an ordinary Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  /// Single Laurent monomial c * x^e (possibly negative exponents).
  bool is_laurent_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
  mpq_class constant_value() const;
  /// Exponent of `name` in a Laurent monomial (0 when absent).
  int laurent_exponent(std::string_view name) const;

  /// Symbols that actually occur (subset of params()).
  std::vector<std::string> free_symbols() const;
  bool depends_on(std::string_view name) const;

  /// Same value over a superset of the current parameters.
  RatFunc over(const ParamSetPtr& superset) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DivisionByZero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc pow(int n) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Simultaneous substitution. Unbound symbols are untouched; bindings for
  /// symbols not present are ignored. Throws SingularSubstitution when the
  /// denominator vanishes identically.
  RatFunc substitute(const Bindings& bindings) const;

  /// Limit as `name` -> value by exact cancellation. Throws SingularLimit.
  RatFunc limit(std::string_view name, const mpq_class& value) const;

  /// Throws DivisionByZero at a pole, LookupError when a symbol is unbound.
  mpq_class evaluate(const RationalPoint& point) const;

  /// Canonical text form; parse_ratfunc(to_string()) round-trips exactly.
  std::string to_string() const;

 private:
  ParamSetPtr params_;
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& x);

/// Expresses both operands over a common ParamSet.
std::pair<RatFunc, RatFunc> unify(const RatFunc& a, const RatFunc& b);

}  // namespace qdeform
