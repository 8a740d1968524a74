#include <gtest/gtest.h>

#include "macaulay/catalecticant.hpp"
#include "macaulay/errors.hpp"
#include "macaulay/random_forms.hpp"
#include "support.hpp"

using namespace macaulay;
using test::dual;

TEST(Delta, OrderZeroIsCoordinateColumn) {
  const auto g = dual("y1^4", 2);
  const auto d = delta_matrix(g, 0);
  EXPECT_EQ(d.cols(), 1u);
  EXPECT_EQ(d.column(0), omega_star_coordinates(g));
  EXPECT_EQ(d.column(0), (RationalVector{24, 0, 0, 0, 0}));
}

TEST(Delta, QuarticSecondOrder) {
  const auto d = delta_matrix(dual("y1^4", 2), 2);
  RationalMatrix expected(3, 3);
  expected(0, 0) = 24;
  EXPECT_EQ(d, expected);
}

TEST(Delta, TransposeSymmetry) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const int s = 1 + trial % 6;
    const auto g = random_form(n, s, rng, 20);
    for (int i = 0; i <= s; ++i) EXPECT_EQ(delta_matrix(g, i), delta_matrix(g, s - i).transpose());
  }
}

TEST(Delta, Errors) {
  EXPECT_THROW(delta_matrix(DualPolynomial(2), 0), InvalidArgument);
  EXPECT_THROW(delta_matrix(dual("y1^2 + y2", 2), 1), InvalidArgument);
  EXPECT_THROW(delta_matrix(dual("y1^2", 2), 3), InvalidArgument);
}

TEST(StackedDelta, Shapes) {
  const std::vector<DualPolynomial> one{dual("y1^3*y2", 2)};
  EXPECT_EQ(stacked_delta(one, 2), delta_matrix(one[0], 2));
  const std::vector<DualPolynomial> two{dual("y1^2", 2), dual("y2^2", 2)};
  const auto m = stacked_delta(two, 1);
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_THROW(stacked_delta(std::vector<DualPolynomial>{dual("y1^2", 2), dual("y2^3", 2)}, 1), InvalidArgument);
}

TEST(StackedDelta, LevelPairRanks) {
  // The rank of the order-q stack is h_q; the order-1 stack sees the
  // degree-3 slice of the dual module.
  const std::vector<DualPolynomial> tops{dual("y1^2*y2*y3", 3), dual("y1*y2^2*y3 + y2*y3^3", 3)};
  EXPECT_EQ(rank(stacked_delta(tops, 1)), 3u);
  EXPECT_EQ(rank(stacked_delta(tops, 3)), 6u);
  EXPECT_EQ(derivative_span(tops, 3).size(), 6u);
}

TEST(HilbertFromDelta, Examples) {
  EXPECT_EQ(hilbert_from_delta(dual("y1^5", 3)).values, (std::vector<std::size_t>{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(hilbert_from_delta(dual("y1^3*y2^2", 2)).values, (std::vector<std::size_t>{1, 2, 3, 3, 2, 1}));
  EXPECT_EQ(hilbert_from_delta(dual("y1^4 + y1*y2^3", 2)).values, (std::vector<std::size_t>{1, 2, 3, 2, 1}));
}

TEST(HilbertFromDelta, PalindromeAndOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const int s = 1 + trial % 5;
    const auto g = random_form(n, s, rng, 3);
    const auto h = hilbert_from_delta(g);
    EXPECT_TRUE(std::equal(h.values.begin(), h.values.end(), h.values.rbegin()));
    for (int j = 0; j <= s; ++j) EXPECT_EQ(h.values[static_cast<std::size_t>(j)], derivative_span(std::span(&g, 1), j).size());
  }
}

TEST(CompressedLevel, Examples) {
  EXPECT_TRUE(is_compressed_level(std::vector<DualPolynomial>{dual("y1^3*y2^2", 2)}));
  EXPECT_FALSE(is_compressed_level(std::vector<DualPolynomial>{dual("y1^4*y2", 2)}));
  EXPECT_TRUE(is_compressed_level(std::vector<DualPolynomial>{dual("y1^2*y2*y3", 3), dual("y1*y2^2*y3 + y2*y3^3", 3)}));
  try {
    is_compressed_level(std::vector<DualPolynomial>{dual("y1^2", 2), dual("2*y1^2", 2)});
    FAIL();
  } catch (const DependentLeadingForms& e) {
    ASSERT_EQ(e.relation().size(), 2u);
    EXPECT_EQ(e.relation()[0] * 1 + e.relation()[1] * 2, 0);
  }
}

TEST(CompressedHf, Examples) {
  EXPECT_EQ(compressed_hf(3, 4, {{0, 0, 0, 0, 2}}).values, (std::vector<std::size_t>{1, 3, 6, 6, 2}));
  for (std::size_t i = 2; i <= 5; ++i)
    EXPECT_EQ(compressed_hf(2, 4, {{0, 0, 0, 0, i}}).values, (std::vector<std::size_t>{1, 2, 3, 4, i}));
  for (std::size_t n = 2; n <= 5; ++n)
    EXPECT_EQ(compressed_hf(n, 4, {{0, 0, 0, 0, 1}}).values, (std::vector<std::size_t>{1, n, n * (n + 1) / 2, n, 1}));
  EXPECT_EQ(compressed_initial_degree(2, 5, {{0, 0, 0, 0, 0, 1}}), 3);
  EXPECT_THROW(compressed_hf(2, 3, {{0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(compressed_hf(2, 2, {{0, 1, 0}}), InvalidArgument);
}

TEST(SocleCorrection, Examples) {
  EXPECT_EQ(socle_correction(2, 1, {{0, 1}}), 0u);
  EXPECT_EQ(socle_correction(3, 3, {{0, 0, 0, 1}}), 3u);
  // s >= 2(v-1) gives zero.
  for (std::size_t n = 2; n <= 4; ++n)
    for (int s = 2; s <= 6; ++s) {
      SocleType e{std::vector<std::size_t>(static_cast<std::size_t>(s + 1), 0)};
      e.values.back() = 1;
      const int v = compressed_initial_degree(n, s, e);
      if (v >= 1 && s >= 2 * (v - 1)) EXPECT_EQ(socle_correction(n, v, e), 0u) << n << " " << s;
    }
}
