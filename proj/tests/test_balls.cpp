#include <gtest/gtest.h>

#include <set>

#include "burstcodes/balls.hpp"
#include "oracles.hpp"

using burst::ErrorModel;
using burst::Word;

namespace {

std::set<std::string> as_strings(const std::vector<Word>& v) {
  std::set<std::string> s;
  for (const auto& w : v) s.insert(w.to_string());
  return s;
}

}  // namespace

TEST(Balls, Burst21ExampleBall) {
  const auto got = as_strings(burst::ball(Word::parse("010010"), ErrorModel::burst21()));
  const std::set<std::string> want = {"00010", "10010", "01010", "01110", "01000", "01001"};
  EXPECT_EQ(got, want);
}

TEST(Balls, ConstantWordHasSingletonBall) {
  for (std::size_t b = 1; b <= 4; ++b) {
    const auto z = burst::ball(Word::zeros(12), ErrorModel::del_exact(b));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_EQ(z[0], Word::zeros(12 - b));
  }
}

TEST(Balls, BallsAreSortedAndExcludeTheEmptyEvent) {
  const Word x = Word::parse("0110100");
  for (const auto& m : {ErrorModel::del_at_most(3), ErrorModel::ins_at_most(2), ErrorModel::del_non_consecutive(3)}) {
    const auto v = burst::ball(x, m);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
    EXPECT_FALSE(std::binary_search(v.begin(), v.end(), x));
  }
}

TEST(Balls, DeletionBallsMatchOracle) {
  for (std::size_t n = 2; n <= 9; ++n)
    burst::for_each_word(n, [&](const Word& x) {
      const std::string s = x.to_string();
      for (std::size_t b = 1; b < n && b <= 4; ++b) {
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::del_exact(b))), oracle::del_exact(s, b));
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::del_at_most(b))), oracle::del_at_most(s, b));
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::del_non_consecutive(b))), oracle::del_non_consecutive(s, b));
      }
      if (n >= 3) {
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::burst21())), oracle::burst21(s));
      }
    });
}

TEST(Balls, InsertionBallsMatchPreimageOracle) {
  for (std::size_t n = 2; n <= 6; ++n)
    burst::for_each_word(n, [&](const Word& x) {
      const std::string s = x.to_string();
      for (std::size_t b = 1; b < n && b <= 3; ++b) {
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::ins_exact(b))), oracle::ins_exact(s, b));
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::ins_at_most(b))), oracle::ins_at_most(s, b));
        ASSERT_EQ(as_strings(burst::ball(x, ErrorModel::ins_non_consecutive(b))), oracle::ins_non_consecutive(s, b));
      }
    });
}

TEST(Balls, ModelDomainChecks) {
  EXPECT_THROW(burst::ball(Word::parse("0101"), ErrorModel::del_exact(4)), burst::DomainError);
  EXPECT_THROW(burst::ball(Word::parse("01"), ErrorModel::burst21()), burst::DomainError);
  EXPECT_THROW(burst::ball(Word::zeros(62), ErrorModel::ins_exact(3)), burst::DomainError);
  EXPECT_THROW(ErrorModel::burst21().mirrored(), burst::DomainError);
  EXPECT_EQ(ErrorModel::del_non_consecutive(3).mirrored(), ErrorModel::ins_non_consecutive(3));
  EXPECT_EQ(burst::parse_kind("del-at-most-noncons"), burst::ErrorKind::DelAtMostNonConsecutive);
  EXPECT_THROW(burst::parse_kind("bogus"), burst::DomainError);
}

TEST(Balls, SizeFormulaMatchesEnumeration) {
  EXPECT_EQ(burst::ball_size_formula(Word::zeros(8), 2), 1u);
  EXPECT_EQ(burst::ball_size_formula(Word::parse("01010101"), 1), 8u);
  const Word x = Word::parse("010010");
  EXPECT_EQ(burst::ball_size_formula(x, 2), burst::ball(x, ErrorModel::del_exact(2)).size());
  for (std::size_t n : {8u, 12u})
    burst::for_each_word(n, [&](const Word& w) {
      for (std::size_t b : {1u, 2u, 3u, 4u}) {
        if (n % b) continue;
        const std::size_t f = burst::ball_size_formula(w, b);
        ASSERT_EQ(f, oracle::del_exact(w.to_string(), b).size());
        ASSERT_GE(f, 1u);
        ASSERT_LE(f, n - b + 1);
      }
    });
}

TEST(Balls, RunCountCombinatorics) {
  EXPECT_EQ(burst::ball_size_count(8, 2, 1), 4u);
  for (std::size_t n = 1; n <= 14; ++n) {
    std::vector<std::uint64_t> tally(n + 1, 0);
    burst::for_each_word(n, [&](const Word& x) { ++tally[burst::run_count(x)]; });
    for (std::size_t r = 1; r <= n; ++r) EXPECT_EQ(burst::words_with_runs(n, r), tally[r]) << n << ' ' << r;
  }
  EXPECT_EQ(burst::binomial(62, 31), 465428353255261088ULL);
}

TEST(Balls, DistributionFrozenValues) {
  const auto d = burst::ball_size_distribution(8, 2);
  const std::vector<std::uint64_t> want = {4, 24, 60, 80, 60, 24, 4};
  ASSERT_EQ(d.counts.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(d.counts[i].formula, want[i]);
    EXPECT_EQ(d.counts[i].enumerated, want[i]);
  }
  const auto e = burst::ball_size_distribution(12, 3);
  const std::vector<std::uint64_t> want12 = {8, 72, 288, 672, 1008, 1008, 672, 288, 72, 8};
  ASSERT_EQ(e.counts.size(), want12.size());
  for (std::size_t i = 0; i < want12.size(); ++i) EXPECT_EQ(e.counts[i].enumerated, want12[i]);
  EXPECT_TRUE(e.consistent());
}

TEST(Balls, RestrictedBurst21) {
  const Word x = Word::parse("0100010");
  EXPECT_EQ(as_strings(burst::burst21_restricted(x, 0, 0, 1)), (std::set<std::string>{"011010", "010110"}));
  EXPECT_EQ(as_strings(burst::burst21_restricted(x, 0, 0, 0)), (std::set<std::string>{"010010"}));
}
