#include <gtest/gtest.h>

#include <random>

#include "dehn/errors.hpp"
#include "dehn/linalg.hpp"
#include "test_support.hpp"

using namespace dehn;

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RationalMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(RationalMatrix(2, 2)), 0u);
  EXPECT_EQ(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}}, 2)), 1u);
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(RationalMatrix(2, 3)).size(), 3u);
  auto k = kernel_basis(RationalMatrix::from_rows({{1, 1}}, 2));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{1, -1}));
}

TEST(QuotientDim, Examples) {
  Vector e1{1, 0}, e2{0, 1};
  EXPECT_EQ(quotient_dim(std::vector<Vector>{}, {e1, e2}), 2u);
  EXPECT_EQ(quotient_dim({e1}, {e1, e2}), 1u);
  EXPECT_EQ(quotient_dim({e1 + e2}, {e1, e2, e1 - e2}), 1u);
}

TEST(QuotientDim, RejectsNonContainedSubspace) {
  Vector e1{1, 0}, e2{0, 1};
  EXPECT_THROW(quotient_dim({e2}, {e1}), SubspaceNotContained);
}

TEST(Echelon, RationalEntries) {
  auto m = RationalMatrix::from_rows({{Rational(1, 2), 1}, {Rational(1, 3), Rational(2, 3)}}, 2);
  auto e = reduced_row_echelon(m);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0}));
  EXPECT_EQ(e.reduced.row(0), (Vector{1, 2}));
  EXPECT_TRUE(is_zero(e.reduced.row(1)));
}

TEST(Solve, ConsistentAndInconsistent) {
  auto m = RationalMatrix::from_rows({{1, 2}, {3, 4}}, 2);
  auto x = solve(m, {5, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ(m * *x, (Vector{5, 6}));
  auto singular = RationalMatrix::from_rows({{1, 1}, {2, 2}}, 2);
  EXPECT_FALSE(solve(singular, {1, 0}));
}

TEST(Inverse, TimesOriginalIsIdentity) {
  auto m = RationalMatrix::from_rows({{2, 1, 0}, {0, 1, Rational(1, 2)}, {1, 0, 1}}, 3);
  EXPECT_EQ(m * inverse(m), RationalMatrix::identity(3));
  EXPECT_EQ(inverse(m) * m, RationalMatrix::identity(3));
}

TEST(Subspace, CanonicalRepresentation) {
  Subspace a({{1, 1, 0}, {0, 1, 1}}, 3);
  Subspace b({{1, 2, 1}, {1, 0, -1}}, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
  EXPECT_TRUE(a.contains(Vector{2, 3, 1}));
  EXPECT_FALSE(a.contains(Vector{1, 0, 0}));
  EXPECT_TRUE(is_zero(a.reduce({2, 3, 1})));
  EXPECT_EQ(a.sum({{1, 0, 0}}).dim(), 3u);
}

TEST(LinalgProperty, RankNullity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    auto m = testkit::random_matrix(rng, r, c, 2);
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    }
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(kernel_basis(m), k);
  }
}

TEST(LinalgProperty, SubspaceReduceIsIdempotentAndDifferenceInside) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> span;
    for (int i = 0; i < 3; ++i) span.push_back(testkit::random_vector(rng, 5));
    Subspace s(span, 5);
    Vector v = testkit::random_vector(rng, 5);
    Vector r = s.reduce(v);
    EXPECT_EQ(s.reduce(r), r);
    EXPECT_TRUE(s.contains(v - r));
  }
}
