#include <gtest/gtest.h>

#include <random>

#include "qdeform/errors.hpp"
#include "qdeform/symexpr/parse.hpp"
#include "qdeform/tensor/kernels.hpp"
#include "qdeform/tensor/sym_matrix.hpp"

using namespace qdeform;

namespace {

SymMatrix M(std::size_t r, std::size_t c, std::vector<const char*> xs) {
  std::vector<RatFunc> e;
  for (auto* x : xs) e.push_back(parse_ratfunc(x));
  return SymMatrix::from_entries(r, c, std::move(e));
}

SymMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  static const char* atoms[] = {"0", "1", "q", "q^-1", "h", "2*q - h", "1/(1 - q)", "h^2*q", "-3"};
  std::uniform_int_distribution<int> pick(0, 8);
  std::vector<RatFunc> e;
  for (std::size_t i = 0; i < r * c; ++i) e.push_back(parse_ratfunc(atoms[pick(rng)]));
  return SymMatrix::from_entries(r, c, std::move(e));
}

SymMatrix glq2() {
  return M(4, 4, {"q", "0", "0", "0", "0", "1", "0", "0", "0", "q - q^-1", "1", "0", "0", "0", "0", "q"});
}

}  // namespace

TEST(SymMatrix, FromEntriesChecksCount) {
  std::vector<RatFunc> e(15);
  EXPECT_THROW(SymMatrix::from_entries(4, 4, e), DimensionMismatch);
}

TEST(SymMatrix, KronIndexConvention) {
  std::mt19937 rng(7);
  SymMatrix a = random_matrix(rng, 2, 3);
  SymMatrix b = random_matrix(rng, 3, 2);
  SymMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(k(3 * i + x, 2 * j + y), a(i, j) * b(x, y));
}

TEST(SymMatrix, MixedProduct) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    SymMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    SymMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(SymMatrix, PermutationIdentities) {
  for (std::size_t n : {2u, 3u}) {
    SymMatrix p = permutation_matrix(n);
    EXPECT_TRUE((p * p).is_identity());
  }
  std::mt19937 rng(3);
  SymMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
  SymMatrix p = permutation_matrix(2);
  EXPECT_EQ(p * kron(a, b) * p, kron(b, a));
}

TEST(SymMatrix, EmbedMatchesKroneckerOracle) {
  std::mt19937 rng(5);
  for (std::size_t n : {2u, 3u}) {
    SymMatrix r = random_matrix(rng, n * n, n * n);
    SymMatrix id = SymMatrix::identity(n);
    SymMatrix p23 = kron(id, permutation_matrix(n));
    SymMatrix p12 = kron(permutation_matrix(n), id);
    SymMatrix r12 = kron(r, id);
    EXPECT_EQ(embed(r, {n, 1, 2}), r12);
    EXPECT_EQ(embed(r, {n, 2, 3}), kron(id, r));
    EXPECT_EQ(embed(r, {n, 1, 3}), p23 * r12 * p23);
    EXPECT_EQ(embed(r, {n, 2, 1}), p12 * r12 * p12);
  }
}

TEST(SymMatrix, EmbedRejectsBadLegs) {
  SymMatrix r = glq2();
  EXPECT_THROW(embed(r, {2, 1, 1}), DimensionMismatch);
  EXPECT_THROW(embed(r, {2, 0, 2}), DimensionMismatch);
  EXPECT_THROW(embed(r, {3, 1, 2}), DimensionMismatch);
}

TEST(SymMatrix, InverseRoundTrip) {
  SymMatrix r = glq2();
  SymMatrix inv = mat_inverse(r);
  EXPECT_TRUE((r * inv).is_identity());
  EXPECT_TRUE((inv * r).is_identity());
  EXPECT_EQ(inv(2, 1), parse_ratfunc("q^-1 - q"));
  SymMatrix sing = M(2, 2, {"q", "1", "q^2", "q"});
  EXPECT_THROW(mat_inverse(sing), SingularMatrix);
}

TEST(SymMatrix, InverseNeedsPivoting) {
  SymMatrix a = M(3, 3, {"0", "1", "q", "1", "0", "0", "h", "0", "1"});
  EXPECT_TRUE((a * mat_inverse(a)).is_identity());
}

TEST(SymMatrix, LimitNamesEntry) {
  SymMatrix a = M(2, 2, {"(q^2 - 1)/(q - 1)", "h", "1/(q - 1)", "1"});
  try {
    a.limit("q", 1);
    FAIL() << "expected SingularLimit";
  } catch (const SingularLimit& e) {
    EXPECT_NE(std::string(e.what()).find("entry (2,1)"), std::string::npos);
  }
  SymMatrix b = M(1, 2, {"(q^2 - 1)/(q - 1)", "h"});
  EXPECT_EQ(b.limit("q", 1), M(1, 2, {"2", "h"}));
}

TEST(SymMatrix, LocalDimension) {
  EXPECT_EQ(local_dimension(SymMatrix::identity(9)), 3u);
  EXPECT_THROW(local_dimension(SymMatrix::identity(8)), DimensionMismatch);
}

TEST(Kernels, ParallelMatchesSerial) {
  std::mt19937 rng(17);
  for (std::size_t n : {3u, 9u, 12u}) {
    SymMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
    auto s = kernels::multiply_serial(a.entries(), b.entries(), n, n, n);
    auto p = kernels::multiply_parallel(a.entries(), b.entries(), n, n, n);
    EXPECT_EQ(s, p);
    auto f = [](const RatFunc& x) { return x * x + RatFunc(1); };
    EXPECT_EQ(kernels::map_serial(a.entries(), f), kernels::map_parallel(a.entries(), f));
  }
}

TEST(Kernels, ProductAssociative) {
  std::mt19937 rng(23);
  SymMatrix a = random_matrix(rng, 9, 9), b = random_matrix(rng, 9, 9), c = random_matrix(rng, 9, 9);
  EXPECT_EQ((a * b) * c, a * (b * c));
}
