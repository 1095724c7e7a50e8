#include "qdeform/ncalg/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qdeform/errors.hpp"
#include "qdeform/symexpr/parse.hpp"

namespace qdeform {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second) {
      throw SchemaError("duplicate generator '" + names_[i] + "'");
    }
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view name) const {
  auto l = find(name);
  if (!l) throw LookupError("unknown generator '" + std::string(name) + "'");
  return *l;
}

Alphabet Alphabet::extended(const std::vector<std::string>& more) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), more.begin(), more.end());
  return Alphabet(std::move(all));
}

NCPoly NCPoly::scalar(const RatFunc& c) { return word(Word{}, c); }

NCPoly NCPoly::word(Word w, const RatFunc& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
  return p;
}

RatFunc NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

void NCPoly::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

NCPoly operator+(NCPoly a, const NCPoly& b) {
  for (const auto& [w, c] : b.terms_) a.add_term(w, c);
  return a;
}

NCPoly operator-(NCPoly a, const NCPoly& b) {
  for (const auto& [w, c] : b.terms_) a.add_term(w, -c);
  return a;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly p;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      p.add_term(w, c * d);
    }
  return p;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  NCPoly p = *this;
  for (auto& [w, x] : p.terms_) x *= c;
  return p;
}

NCPoly NCPoly::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  NCPoly p;
  for (const auto& [w, c] : terms_) {
    RatFunc x = f(c);
    if (!x.is_zero()) p.terms_.emplace(w, std::move(x));
  }
  return p;
}

NCPoly NCPoly::substitute(const Bindings& b) const {
  if (b.empty()) return *this;
  return map_coefficients([&](const RatFunc& c) { return c.substitute(b); });
}

NCPoly NCPoly::apply_letter_map(const std::vector<std::optional<NCPoly>>& images) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    NCPoly acc = NCPoly::scalar(c);
    for (Letter l : w) {
      if (l < images.size() && images[l]) {
        acc = acc * *images[l];
      } else {
        acc = acc * NCPoly::letter(l);
      }
      if (acc.is_zero()) break;
    }
    out = out + acc;
  }
  return out;
}

std::vector<Letter> NCPoly::letters() const {
  std::set<Letter> s;
  for (const auto& [w, c] : terms_) s.insert(w.begin(), w.end());
  return {s.begin(), s.end()};
}

std::string NCPoly::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "[" + it->second.to_string() + "] ";
    if (it->first.empty()) {
      out += "1";
    } else {
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (i) out += '.';
        out += alphabet.name(it->first[i]);
      }
    }
  }
  return out;
}

namespace {

bool word_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '^' || ch == '-' || ch == '@' ||
         ch == '.';
}

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet, const ParamSetPtr& params) {
  NCPoly p;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  skip();
  if (text.substr(pos) == "0") return p;
  while (true) {
    skip();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) fail("unterminated coefficient");
    RatFunc c = parse_ratfunc(text.substr(pos + 1, close - pos - 1), params);
    pos = close + 1;
    skip();
    std::size_t start = pos;
    while (pos < text.size() && word_char(text[pos])) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (token.empty()) fail("expected a word");
    Word w;
    if (token != "1") {
      std::size_t s = 0;
      while (s <= token.size()) {
        std::size_t dot = token.find('.', s);
        if (dot == std::string_view::npos) dot = token.size();
        auto name = token.substr(s, dot - s);
        auto l = alphabet.find(name);
        if (!l) fail("unknown generator '" + std::string(name) + "'");
        w.push_back(*l);
        s = dot + 1;
      }
    }
    p.add_term(w, c);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') fail("expected '+'");
    ++pos;
  }
  return p;
}

}  // namespace qdeform
