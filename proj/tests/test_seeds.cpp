#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cck/error.hpp"
#include "cck/seeds.hpp"

using namespace cck;

namespace {

ExtendedMatrix random_matrix(std::mt19937& rng, std::size_t n, std::size_t ell) {
  std::uniform_int_distribution<int> d(-2, 2);
  ExtendedMatrix b(n, ell);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      b(i, j) = d(rng);
      b(j, i) = -b(i, j);
    }
  for (std::size_t i = n + 1; i <= n + ell; ++i)
    for (std::size_t j = 1; j <= n; ++j) b(i, j) = d(rng);
  return b;
}

}  // namespace

TEST(Seeds, MatrixMutationIsInvolution) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto b = random_matrix(rng, 1 + rng() % 6, rng() % 6);
    const std::size_t k = 1 + rng() % b.n();
    auto m = mutate_matrix(b, k);
    EXPECT_TRUE(m.top_skew_symmetric());
    EXPECT_EQ(mutate_matrix(m, k), b);
  }
}

TEST(Seeds, ZeroTopBlockOnlyFlipsColumn) {
  ExtendedMatrix b(3, 2);
  b(4, 1) = 1;
  b(4, 2) = -2;
  b(5, 2) = 3;
  auto m = mutate_matrix(b, 2);
  EXPECT_EQ(m(4, 2), 2);
  EXPECT_EQ(m(5, 2), -3);
  EXPECT_EQ(m(4, 1), 1);
  EXPECT_THROW(mutate_matrix(b, 4), DomainError);
  EXPECT_THROW(mutate_matrix(b, 0), DomainError);
}

TEST(Seeds, SquareExchangeRelation) {
  // two-vertex quiver 1 -> 2 with principal coefficients
  auto b = ExtendedMatrix::principal({{0, 1}, {-1, 0}});
  auto s = mutate_seed(Seed::initial(b), 1);
  EXPECT_EQ(to_string(s.cluster_values[0]), "x1^-1 * x2 + y1 * x1^-1");
  auto back = mutate_seed(s, 1);
  EXPECT_EQ(back.cluster_values, Seed::initial(b).cluster_values);
  EXPECT_EQ(back.matrix, b);
}

TEST(Seeds, PentagonPeriodicity) {
  auto b = ExtendedMatrix::principal({{0, 1}, {-1, 0}});
  auto s = Seed::initial(b);
  for (int i = 0; i < 5; ++i) s = mutate_seed(s, 1 + i % 2);
  // After five alternating mutations the cluster returns up to a transposition.
  EXPECT_EQ(s.cluster_values[1], Seed::initial(b).cluster_values[0]);
  EXPECT_EQ(s.cluster_values[0], Seed::initial(b).cluster_values[1]);
}

TEST(Seeds, PrincipalQuiverHasCoefficientArrows) {
  auto b = ExtendedMatrix::principal({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
  auto q = quiver_of(b);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(q.arrow_count(3 + i, i), 1);
  EXPECT_EQ(q.arrow_count(1, 2), 1);
  EXPECT_EQ(q.arrow_count(3, 2), 1);
  EXPECT_EQ(matrix_of(q), b);
  EXPECT_TRUE(quiver_of(ExtendedMatrix(3, 1)).arrows.empty());
}

TEST(Seeds, QuiverMutationAgreesWithMatrixMutation) {
  std::mt19937 rng(9);
  for (int t = 0; t < 300; ++t) {
    auto b = random_matrix(rng, 1 + rng() % 6, rng() % 5);
    const std::size_t k = 1 + rng() % b.n();
    EXPECT_EQ(mutate_quiver(quiver_of(b), k), quiver_of(mutate_matrix(b, k)));
    EXPECT_EQ(matrix_of(quiver_of(b)), b);
  }
}

TEST(Seeds, MatrixTextRoundTrip) {
  std::mt19937 rng(4);
  auto b = random_matrix(rng, 4, 2);
  std::stringstream ss;
  write_matrix(ss, b);
  EXPECT_EQ(read_matrix(ss), b);
  std::stringstream bad("cck/1\n2 0\n0 1\n1 0\n");
  EXPECT_THROW(read_matrix(bad), InvariantError);
  std::stringstream shortrow("cck/1\n2 0\n0 1\n");
  try {
    read_matrix(shortrow);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Seeds, RandomMutationSequencesStayLaurentAndPositive) {
  std::mt19937 rng(12);
  auto b = ExtendedMatrix::principal({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  for (int run = 0; run < 5; ++run) {
    auto s = Seed::initial(b);
    for (int step = 0; step < 12; ++step) {
      s = mutate_seed(s, 1 + rng() % 3);
      for (const auto& v : s.cluster_values) EXPECT_TRUE(v.coefficients_positive());
    }
  }
}
