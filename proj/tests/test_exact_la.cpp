#include <gtest/gtest.h>

#include "kronlab/errors.hpp"
#include "kronlab/exact_la.hpp"

using namespace kronlab;

namespace {

// Textbook elimination over Q with exact rationals; independent of the
// fraction-free code paths.
std::size_t naive_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(rows, k, 3, rng) * random_matrix(k, cols, 3, rng);
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RatMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(RatMatrix(2, 5)), 0u);
  EXPECT_EQ(rank(RatMatrix::from_ints({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(RatMatrix(0, 4)), 0u);
}

TEST(Rank, RationalEntries) {
  RatMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 2);
  m(1, 1) = 1;
  EXPECT_EQ(rank(m), 1u);
  m(1, 1) = Rational(2, 3);
  EXPECT_EQ(rank(m), 2u);
}

TEST(Rank, AgreesWithNaiveElimination) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7, k = rng() % 5;
    const RatMatrix m = k == 0 ? random_matrix(rows, cols, 4, rng) : low_rank(rows, cols, k, rng);
    ASSERT_EQ(rank(m), naive_rank(m));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(RatMatrix::identity(4)).rows(), 0u);
  const RatMatrix z = kernel_basis(RatMatrix(2, 3));
  EXPECT_EQ(z.rows(), 2u);
  EXPECT_EQ(rank(z), 2u);
  const RatMatrix k = kernel_basis(RatMatrix::from_ints({{1}, {1}}));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k(0, 0), -k(0, 1));
  EXPECT_NE(k(0, 0), 0);
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8, k = rng() % 5;
    const RatMatrix m = k == 0 ? random_matrix(rows, cols, 4, rng) : low_rank(rows, cols, k, rng);
    const RatMatrix ker = kernel_basis(m);
    ASSERT_EQ(rank(m) + ker.rows(), m.rows());
    ASSERT_TRUE((ker * m).is_zero());
    ASSERT_EQ(rank(ker), ker.rows());
  }
}

TEST(Solve, Examples) {
  const RatVector b{Rational(3), Rational(-1, 2)};
  auto x = solve(RatMatrix::identity(2), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
  EXPECT_FALSE(solve(RatMatrix(2, 2), b));
  auto half = solve(RatMatrix::from_ints({{2}}), RatVector{Rational(1)});
  ASSERT_TRUE(half);
  EXPECT_EQ((*half)[0], Rational(1, 2));
  EXPECT_THROW(solve(RatMatrix::identity(2), RatVector{Rational(1)}), InputError);
}

TEST(Solve, SoundnessBothWays) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6, k = 1 + rng() % 4;
    const RatMatrix a = low_rank(rows, cols, k, rng);
    RatVector b(cols);
    if (t % 2 == 0) {
      b = row_times(random_matrix(1, rows, 5, rng).row(0), a);
    } else {
      for (auto& v : b) v = static_cast<long>(rng() % 11) - 5;
    }
    auto x = solve(a, b);
    if (x) {
      ASSERT_EQ(row_times(*x, a), b);
    } else {
      RatMatrix aug = a;
      aug.append_row(b);
      ASSERT_GT(rank(aug), rank(a));
    }
  }
}

TEST(RowEchelon, PivotsAndIdentityColumns) {
  const auto e = row_echelon(RatMatrix::from_ints({{0, 2, 4}, {0, 1, 3}, {0, 3, 7}}));
  ASSERT_EQ(e.pivot_columns, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(e.reduced, RatMatrix::from_ints({{0, 1, 0}, {0, 0, 1}}));
}

TEST(RandomMatrix, DeterministicAndBounded) {
  std::mt19937_64 a = derived_rng(0, {}), b = derived_rng(0, {});
  EXPECT_EQ(random_matrix(2, 2, 1, a), random_matrix(2, 2, 1, b));
  EXPECT_EQ(random_matrix(0, 3, 5, a).rows(), 0u);
  const RatMatrix m = random_matrix(6, 6, 2, a);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_TRUE(abs(m(i, j)) <= 2);
  EXPECT_THROW(random_matrix(1, 1, 0, a), InputError);
}

TEST(RandomMatrix, ThreeByThreeUsuallyInvertible) {
  int singular = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng = derived_rng(seed, {});
    if (rank(random_matrix(3, 3, 10, rng)) < 3) ++singular;
  }
  // Measured: 2 singular draws in 1000 seeds.
  EXPECT_LE(singular, 10);
}

TEST(DerivedRng, SaltSeparatesStreams) {
  auto a = derived_rng(5, {1, 2});
  auto b = derived_rng(5, {2, 1});
  auto c = derived_rng(5, {1, 2});
  const auto x = a();
  EXPECT_NE(x, b());
  EXPECT_EQ(x, c());
}

TEST(ModularRank, LowerBoundsRationalRank) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const RatMatrix m = low_rank(1 + rng() % 6, 1 + rng() % 6, 1 + rng() % 4, rng);
    auto rp = rank_mod_p(m);
    ASSERT_TRUE(rp);
    ASSERT_LE(*rp, rank(m));
  }
  // The reduction mod 3 of diag(1,3) drops rank.
  EXPECT_EQ(rank_mod_p(RatMatrix::from_ints({{1, 0}, {0, 3}}), 3), 1u);
  RatMatrix thirds(1, 1);
  thirds(0, 0) = Rational(1, 3);
  EXPECT_FALSE(rank_mod_p(thirds, 3));
}

TEST(RationalText, RoundTrip) {
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("4/8"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_rational("1/-2"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}
