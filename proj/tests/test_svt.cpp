#include <gtest/gtest.h>

#include <cmath>

#include "burstcodes/svt.hpp"
#include "burstcodes/verify.hpp"
#include "oracles.hpp"

using burst::SvtParams;
using burst::Word;

TEST(Svt, MembershipExamples) {
  EXPECT_TRUE(burst::svt_member(Word::zeros(9), {9, 4, 0, 0}));
  EXPECT_FALSE(burst::svt_member(Word::zeros(9), {9, 4, 1, 0}));
  EXPECT_FALSE(burst::svt_member(Word::zeros(9), {9, 4, 0, 1}));
  EXPECT_TRUE(burst::svt_member(Word::parse("1111011001100011"), {16, 5, 0, 0}));
  EXPECT_THROW(burst::svt_member(Word::zeros(9), {9, 4, 4, 0}), burst::DomainError);
  EXPECT_THROW(burst::svt_member(Word::zeros(9), {9, 1, 0, 0}), burst::DomainError);
}

TEST(Svt, WorkedDecodingExample) {
  const auto [r, t] = burst::svt_decode_traced(Word::parse("111101101100011"), {16, 5, 0, 0}, 8);
  EXPECT_EQ(t.deleted_value, 0);
  EXPECT_EQ(t.augmented_sum, 3u);
  EXPECT_EQ(t.delta, 2u);
  EXPECT_EQ(t.uncertain.to_string(), "0110");
  EXPECT_EQ(r.word.to_string(), "1111011001100011");
}

TEST(Svt, ClassesPartitionTheSpace) {
  for (std::size_t n = 2; n <= 14; ++n)
    for (std::size_t P = 2; P <= 6; ++P) {
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < P; ++c)
        for (int d = 0; d <= 1; ++d)
          burst::for_each_word(n, [&](const Word& x) { total += burst::svt_member(x, {n, P, c, d}); });
      ASSERT_EQ(total, 1ULL << n);
    }
}

TEST(Svt, ZeroWordRestoresFromEveryWindow) {
  for (std::size_t P = 2; P <= 5; ++P)
    for (std::size_t i = 1; i <= 10; ++i)
      for (std::size_t u = i + 1 > P ? i + 1 - P : 1; u <= i; ++u)
        EXPECT_EQ(burst::svt_decode(Word::zeros(9), {10, P, 0, 0}, u).word, Word::zeros(10));
}

TEST(Svt, ExhaustiveWindowedRoundTrip) {
  for (std::size_t P : {3u, 4u, 5u})
    for (std::size_t c = 0; c < P; ++c)
      for (int d = 0; d <= 1; ++d) {
        const auto r = burst::svt_p_bounded_check({10, P, c, d});
        EXPECT_TRUE(r.passed()) << P << ' ' << c << ' ' << d;
        EXPECT_GT(r.decoder_cases, 0u);
      }
}

TEST(Svt, BestParameters) {
  const auto b = burst::svt_best_params(8, 3);
  EXPECT_EQ(b.c, 0u);
  EXPECT_EQ(b.d, 0);
  EXPECT_EQ(b.cardinality, 44u);
  for (std::size_t n : {8u, 10u, 12u})
    for (std::size_t P : {3u, 4u, 5u}) {
      const auto best = burst::svt_best_params(n, P);
      EXPECT_GE(best.cardinality * 2 * P, 1ULL << n);
      EXPECT_LE(n - std::log2(static_cast<double>(best.cardinality)), std::log2(static_cast<double>(P)) + 1 + 1e-12);
    }
  EXPECT_EQ(burst::svt_best_params(10, 5).cardinality, 104u);
}
