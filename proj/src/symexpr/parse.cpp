#include "qdeform/symexpr/parse.hpp"

#include <cctype>

#include "qdeform/errors.hpp"

namespace qdeform {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParamSetPtr& declared, const IntConstants& constants)
      : text_(text), declared_(declared), constants_(constants) {}

  RatFunc run() {
    RatFunc x = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (declared_) x = x.over(union_of(x.params(), declared_));
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc x = term();
    for (;;) {
      if (accept('+')) {
        x = x + term();
      } else if (accept('-')) {
        x = x - term();
      } else {
        return x;
      }
    }
  }

  RatFunc term() {
    RatFunc x = unary();
    for (;;) {
      if (accept('*')) {
        x = x * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        x = x / d;
      } else {
        return x;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    long e = exponent();
    if (e < 0 && base.is_zero()) fail("zero to a negative power");
    if (e > 1000 || e < -1000) fail("exponent out of range");
    return base.pow(static_cast<int>(e));
  }

  long exponent() {
    skip_ws();
    if (accept('(')) {
      RatFunc v = expr();
      if (!accept(')')) fail("expected ')'");
      if (!v.is_constant() || v.constant_value().get_den() != 1) fail("exponent is not an integer");
      mpz_class z = v.constant_value().get_num();
      if (!z.fits_slong_p()) fail("exponent out of range");
      return z.get_si();
    }
    bool neg = accept('-');
    skip_ws();
    long v = 0;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      mpz_class z = integer();
      if (!z.fits_slong_p()) fail("exponent out of range");
      v = z.get_si();
    } else {
      std::string name = identifier();
      auto it = constants_.find(name);
      if (it == constants_.end()) fail("exponent '" + name + "' is not an integer constant");
      v = it->second;
    }
    return neg ? -v : v;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    }
    if (start == pos_) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      RatFunc x = expr();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return RatFunc(mpq_class(integer()));
    std::size_t at = pos_;
    std::string name = identifier();
    if (auto it = constants_.find(name); it != constants_.end()) return RatFunc(it->second);
    if (declared_) {
      if (!declared_->contains(name)) {
        pos_ = at;
        fail("undeclared parameter '" + name + "'");
      }
      return RatFunc::symbol(declared_, name);
    }
    return RatFunc::symbol(name);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  ParamSetPtr declared_;
  const IntConstants& constants_;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const ParamSetPtr& declared, const IntConstants& constants) {
  return Parser(text, declared, constants).run();
}

}  // namespace qdeform
