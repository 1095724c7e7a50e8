#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/symexpr/ratfunc.hpp"

namespace qdeform {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Degree-lexicographic order: shorter words first, then lexicographic by
/// letter index. Letter indices are the generator order.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Ordered generator alphabet. Index = rank in the order.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws SchemaError on duplicate names.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_[l]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  /// Throws LookupError.
  Letter at(std::string_view name) const;
  /// Copy with extra letters appended after the existing ones.
  Alphabet extended(const std::vector<std::string>& more) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
};

/// Finite sum of RatFunc multiples of words; zero coefficients never stored.
class NCPoly {
 public:
  using Terms = std::map<Word, RatFunc, DegLexLess>;

  NCPoly() = default;
  static NCPoly scalar(const RatFunc& c);
  static NCPoly word(Word w, const RatFunc& c = RatFunc(1));
  static NCPoly letter(Letter l) { return word(Word{l}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest word in deg-lex order; requires a nonzero polynomial.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const RatFunc& leading_coef() const { return terms_.rbegin()->second; }
  RatFunc coefficient(const Word& w) const;
  std::size_t degree() const { return is_zero() ? 0 : leading_word().size(); }

  void add_term(const Word& w, const RatFunc& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b);
  friend NCPoly operator-(NCPoly a, const NCPoly& b);
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly scaled(const RatFunc& c) const;
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Applies `f` to every coefficient (zero results are dropped).
  NCPoly map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;
  NCPoly substitute(const Bindings& b) const;
  /// Replaces every letter by an NCPoly image (an algebra map on words).
  NCPoly apply_letter_map(const std::vector<std::optional<NCPoly>>& images) const;
  /// Letters that occur.
  std::vector<Letter> letters() const;

  /// Text form "[coef] x.y + [coef] z"; the empty word prints as "1".
  std::string to_string(const Alphabet& alphabet) const;

 private:
  Terms terms_;
};

/// Parses the text form; unknown letters are a ParseError. Coefficients are
/// parsed over `params` when given.
NCPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet, const ParamSetPtr& params = nullptr);

}  // namespace qdeform
