#include "qdeform/tensor/sym_matrix.hpp"

#include <array>
#include <cmath>
#include <exception>

#include "qdeform/errors.hpp"
#include "qdeform/tensor/kernels.hpp"

namespace qdeform {

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
  return m;
}

SymMatrix SymMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries) {
  if (entries.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries.size()));
  }
  SymMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_ = std::move(entries);
  return m;
}

ParamSetPtr SymMatrix::params() const {
  ParamSetPtr p = ParamSet::empty();
  for (const auto& e : entries_) p = union_of(p, e.params());
  return p;
}

SymMatrix SymMatrix::unified() const {
  ParamSetPtr p = params();
  SymMatrix m = *this;
  for (auto& e : m.entries_) e = e.over(p);
  return m;
}

bool SymMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool SymMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const RatFunc& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

std::optional<EntryWitness> SymMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return EntryWitness{i, j, (*this)(i, j)};
  return std::nullopt;
}

SymMatrix SymMatrix::operator-() const {
  SymMatrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

namespace {

void require_same_shape(const SymMatrix& a, const SymMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes differ");
}

}  // namespace

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  require_same_shape(a, b);
  SymMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  require_same_shape(a, b);
  SymMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes do not compose");
  std::vector<RatFunc> out = a.rows_ * b.cols_ >= kernels::kParallelThreshold
                                 ? kernels::multiply_parallel(a.entries_, b.entries_, a.rows_, a.cols_, b.cols_)
                                 : kernels::multiply_serial(a.entries_, b.entries_, a.rows_, a.cols_, b.cols_);
  return SymMatrix::from_entries(a.rows_, b.cols_, std::move(out));
}

SymMatrix SymMatrix::scaled(const RatFunc& c) const {
  SymMatrix m = *this;
  for (auto& e : m.entries_) e *= c;
  return m;
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

SymMatrix SymMatrix::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  auto out = entries_.size() >= kernels::kParallelThreshold ? kernels::map_parallel(entries_, f)
                                                           : kernels::map_serial(entries_, f);
  return from_entries(rows_, cols_, std::move(out));
}

SymMatrix SymMatrix::substitute(const Bindings& bindings) const {
  return map([&](const RatFunc& x) { return x.substitute(bindings); });
}

SymMatrix SymMatrix::limit(std::string_view name, const mpq_class& value) const {
  std::vector<RatFunc> out(entries_.size());
  std::vector<std::string> failures(entries_.size());
  std::vector<std::exception_ptr> errors(entries_.size());
  const long total = static_cast<long>(entries_.size());
#pragma omp parallel for schedule(dynamic, 4) if (total >= static_cast<long>(kernels::kParallelThreshold))
  for (long i = 0; i < total; ++i) {
    try {
      out[i] = entries_[i].depends_on(name) ? entries_[i].limit(name, value) : entries_[i];
    } catch (const SingularLimit& e) {
      failures[i] = "entry (" + std::to_string(i / cols_ + 1) + "," + std::to_string(i % cols_ + 1) +
                    "): " + e.what();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (long i = 0; i < total; ++i) {
    if (!failures[i].empty()) throw SingularLimit(failures[i]);
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  return from_entries(rows_, cols_, std::move(out));
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  SymMatrix m(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RatFunc& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) {
          const RatFunc& y = b(k, l);
          if (!y.is_zero()) m(i * p + k, j * q + l) = x * y;
        }
    }
  return m;
}

std::size_t local_dimension(const SymMatrix& r) {
  if (!r.is_square()) throw DimensionMismatch("R-matrix must be square");
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(r.rows()))));
  if (n == 0 || n * n != r.rows()) throw DimensionMismatch("R-matrix side is not a perfect square");
  return n;
}

SymMatrix embed(const SymMatrix& r, const LegEmbedding& legs) {
  const std::size_t n = legs.n;
  if (!r.is_square() || r.rows() != n * n) throw DimensionMismatch("embed: operator is not n^2 x n^2");
  if (legs.first < 1 || legs.first > 3 || legs.second < 1 || legs.second > 3 || legs.first == legs.second) {
    throw DimensionMismatch("embed: legs must be distinct members of {1,2,3}");
  }
  const int a = legs.first - 1, b = legs.second - 1, c = 3 - a - b;
  const std::size_t dim = n * n * n;
  SymMatrix m(dim, dim);
  auto split = [n](std::size_t idx) {
    return std::array<std::size_t, 3>{idx / (n * n), (idx / n) % n, idx % n};
  };
  for (std::size_t row = 0; row < dim; ++row) {
    auto ri = split(row);
    for (std::size_t col = 0; col < dim; ++col) {
      auto ci = split(col);
      if (ri[c] != ci[c]) continue;
      const RatFunc& x = r(ri[a] * n + ri[b], ci[a] * n + ci[b]);
      if (!x.is_zero()) m(row, col) = x;
    }
  }
  return m;
}

SymMatrix mat_inverse(const SymMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  SymMatrix m = a;
  SymMatrix inv = SymMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = col; i < n && pivot == n; ++i)
      if (!m(i, col).is_zero()) pivot = i;
    if (pivot == n) throw SingularMatrix("matrix is singular (column " + std::to_string(col + 1) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    RatFunc scale = RatFunc(1) / m(col, col);
    if (!scale.is_one()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(col, j) *= scale;
        if (!inv(col, j).is_zero()) inv(col, j) *= scale;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      RatFunc f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SymMatrix permutation_matrix(std::size_t n) {
  SymMatrix p(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(j * n + i, i * n + j) = RatFunc(1);
  return p;
}

}  // namespace qdeform
