#include "qdeform/hopf/local_algebra.hpp"

#include "qdeform/errors.hpp"

namespace qdeform {

LocalAlgebra::LocalAlgebra(const RewriteSystem& base, const std::vector<std::string>& invertible,
                           std::optional<std::pair<std::string, NCPoly>> quasi_central)
    : system_(invertible.empty() ? base : localize(base, invertible)), alphabet_(system_.alphabet()) {
  if (!quasi_central) return;
  const auto& [name, q] = *quasi_central;
  q_ = q;
  alphabet_ = alphabet_.extended({inverse_name(name)});
  qinv_ = static_cast<Letter>(system_.alphabet().size());
  for (Letter x = 0; x < system_.alphabet().size(); ++x) {
    NCPoly left = system_.normal_form(q * NCPoly::letter(x));
    NCPoly right = system_.normal_form(NCPoly::letter(x) * q);
    if (right.is_zero()) throw AxiomFailure(name + " is a zero divisor");
    RatFunc chi = left.is_zero() ? RatFunc(0) : left.leading_coef() / right.leading_coef();
    if (chi.is_zero() || !(left == right.scaled(chi))) {
      throw AxiomFailure(name + " is not quasi-central: " + name + "." + system_.alphabet().name(x) +
                         " is not a multiple of " + system_.alphabet().name(x) + "." + name);
    }
    chi_.push_back(chi);
  }
}

NCPoly LocalAlgebra::cleared_normal_form(const NCPoly& x) const {
  if (!qinv_) return system_.normal_form(x);
  // Q^-1 y = chi(y)^-1 y Q^-1: collect u * Q^-k with a scalar.
  std::vector<std::tuple<Word, std::size_t, RatFunc>> parts;
  std::size_t top = 0;
  for (const auto& [w, c] : x.terms()) {
    Word u;
    std::size_t k = 0;
    RatFunc scale = c;
    for (Letter l : w) {
      if (l == *qinv_) {
        ++k;
        continue;
      }
      if (k) scale *= chi_[l].pow(-static_cast<int>(k));
      u.push_back(l);
    }
    top = std::max(top, k);
    parts.emplace_back(std::move(u), k, std::move(scale));
  }
  NCPoly cleared;
  for (const auto& [u, k, c] : parts) {
    NCPoly term = NCPoly::word(u, c);
    for (std::size_t i = k; i < top; ++i) term = system_.normal_form(term * q_);
    cleared = cleared + term;
  }
  return system_.normal_form(cleared);
}

}  // namespace qdeform
