#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/symexpr/ratfunc.hpp"

namespace qdeform {

/// Location and value of a matrix entry, used as a failure witness.
struct EntryWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  RatFunc value;
};

/// Dense row-major matrix over RatFunc.
///
/// Basis convention for tensor powers: e_i (x) e_j has index n*i + j with
/// zero-based i, j.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Zero matrix.
  SymMatrix(std::size_t rows, std::size_t cols);

  static SymMatrix identity(std::size_t n);
  /// Throws DimensionMismatch when entries.size() != rows * cols.
  static SymMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<RatFunc>& entries() const { return entries_; }

  /// Union of the entries' parameter sets.
  ParamSetPtr params() const;
  /// Rewrites every entry over one common ParamSet.
  SymMatrix unified() const;

  bool is_zero() const;
  bool is_identity() const;
  /// First nonzero entry in row-major order.
  std::optional<EntryWitness> first_nonzero() const;

  SymMatrix operator-() const;
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
  SymMatrix scaled(const RatFunc& c) const;
  friend bool operator==(const SymMatrix& a, const SymMatrix& b);

  SymMatrix map(const std::function<RatFunc(const RatFunc&)>& f) const;
  SymMatrix substitute(const Bindings& bindings) const;
  /// Entrywise limit; SingularLimit names the offending entry.
  SymMatrix limit(std::string_view name, const mpq_class& value) const;
  mpq_class evaluate_entry(std::size_t i, std::size_t j, const RationalPoint& point) const {
    return (*this)(i, j).evaluate(point);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> entries_;
};

/// Which legs of an n^3-dimensional triple tensor space a two-leg operator
/// acts on. Legs are 1-based and ordered: {2, 1} applies the operator with
/// its first factor on leg 2.
struct LegEmbedding {
  std::size_t n = 2;
  int first = 1;
  int second = 2;
};

SymMatrix kron(const SymMatrix& a, const SymMatrix& b);
/// Throws DimensionMismatch unless r is n^2 x n^2 and the legs are distinct in {1,2,3}.
SymMatrix embed(const SymMatrix& r, const LegEmbedding& legs);
/// Throws SingularMatrix when the matrix is not invertible over the function field.
SymMatrix mat_inverse(const SymMatrix& a);
/// The n^2 x n^2 flip P(e_i (x) e_j) = e_j (x) e_i.
SymMatrix permutation_matrix(std::size_t n);
/// Integer side length n with n*n == dim, or DimensionMismatch.
std::size_t local_dimension(const SymMatrix& r);

}  // namespace qdeform
