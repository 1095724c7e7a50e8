#include "qdeform/rmx/verify.hpp"

#include "qdeform/errors.hpp"

namespace qdeform {

namespace {

SymMatrix ybe_residual(const SymMatrix& r12, const SymMatrix& r13, const SymMatrix& r23, std::size_t n) {
  SymMatrix a = embed(r12, {n, 1, 2});
  SymMatrix b = embed(r13, {n, 1, 3});
  SymMatrix c = embed(r23, {n, 2, 3});
  return a * b * c - c * b * a;
}

SymMatrix flipped(const SymMatrix& r, std::size_t n) {
  SymMatrix p = permutation_matrix(n);
  return p * r * p;
}

CheckResult identity_check(const SymMatrix& m) {
  SymMatrix diff = m - SymMatrix::identity(m.rows());
  auto w = diff.first_nonzero();
  return {!w.has_value(), w};
}

}  // namespace

SymMatrix qybe_residual(const SymMatrix& r) {
  std::size_t n = local_dimension(r);
  return ybe_residual(r, r, r, n);
}

SymMatrix cqybe_residual(const ColouredFamily& fam, const std::array<ColourGroup, 3>& colours) {
  std::size_t n = local_dimension(fam.entries());
  const auto& [c1, c2, c3] = colours;
  return ybe_residual(fam.instantiate(c1, c2), fam.instantiate(c1, c3), fam.instantiate(c2, c3), n);
}

CheckResult triangular_check(const SymMatrix& r) {
  std::size_t n = local_dimension(r);
  return identity_check(r * flipped(r, n));
}

CheckResult colour_triangular_check(const ColouredFamily& fam, const std::pair<ColourGroup, ColourGroup>& colours) {
  std::size_t n = local_dimension(fam.entries());
  SymMatrix r12 = fam.instantiate(colours.first, colours.second);
  SymMatrix r21 = flipped(fam.instantiate(colours.second, colours.first), n);
  mat_inverse(r21);
  return identity_check(r12 * r21);
}

SymMatrix hecke_residual(const SymMatrix& r, const RatFunc& alpha, const RatFunc& beta) {
  if (!r.is_square()) throw DimensionMismatch("Hecke residual needs a square matrix");
  std::size_t n = local_dimension(r);
  SymMatrix pr = permutation_matrix(n) * r;
  SymMatrix id = SymMatrix::identity(r.rows());
  return (pr - id.scaled(alpha)) * (pr - id.scaled(beta));
}

SymMatrix conjugate_r(const SymMatrix& r, const SymMatrix& t) {
  std::size_t n = local_dimension(r);
  if (!t.is_square() || t.rows() != n) throw DimensionMismatch("conjugating matrix has the wrong size");
  SymMatrix ti = mat_inverse(t);
  return kron(ti, ti) * r * kron(t, t);
}

}  // namespace qdeform
