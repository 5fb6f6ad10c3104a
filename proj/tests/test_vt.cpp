#include <gtest/gtest.h>

#include "burstcodes/rll.hpp"
#include "burstcodes/vt.hpp"
#include "oracles.hpp"

using burst::VtParams;
using burst::Word;

TEST(Vt, MembershipExamples) {
  EXPECT_TRUE(burst::vt_member(Word::parse("0000"), {4, 0}));
  EXPECT_TRUE(burst::vt_member(Word::parse("1001"), {4, 0}));
  EXPECT_TRUE(burst::vt_rll_member(Word::parse("0000"), {4, 0}, 4));
  EXPECT_FALSE(burst::vt_rll_member(Word::parse("0000"), {4, 0}, 3));
  EXPECT_TRUE(burst::vt_rll_member(Word::parse("0110"), {4, 0}, 2));
  EXPECT_THROW(burst::vt_member(Word::parse("0000"), {4, 5}), burst::DomainError);
}

TEST(Vt, ZeroClassOfLengthFour) {
  std::vector<std::string> got;
  burst::for_each_word(4, [&](const Word& x) {
    if (burst::vt_member(x, {4, 0})) got.push_back(x.to_string());
  });
  EXPECT_EQ(got, (std::vector<std::string>{"0000", "0110", "1001", "1111"}));
}

TEST(Vt, ClassSizesFrozen) {
  const std::vector<std::vector<std::uint64_t>> want = {
      {30, 28, 28, 29, 28, 28, 29, 28, 28},
      {316, 315, 315, 315, 315, 315, 315, 315, 315, 315, 315, 315, 315},
  };
  const std::size_t ns[] = {8, 12};
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<std::uint64_t> hist(ns[k] + 1, 0);
    burst::for_each_word(ns[k], [&](const Word& x) { ++hist[burst::vt_syndrome(x)]; });
    EXPECT_EQ(hist, want[k]);
  }
}

TEST(Vt, DecodeExamples) {
  const auto a = burst::vt_decode(Word::parse("000"), {4, 0});
  EXPECT_EQ(a.word.to_string(), "0000");
  EXPECT_EQ(a.window, (burst::Interval{1, 4}));
  const auto b = burst::vt_decode(Word::parse("110"), {4, 0});
  EXPECT_EQ(b.word.to_string(), "0110");
  EXPECT_EQ(b.window, (burst::Interval{1, 1}));
}

TEST(Vt, DecoderMatchesPreimageOracle) {
  for (std::size_t n = 2; n <= 11; ++n) {
    std::vector<std::vector<std::string>> classes(n + 1);
    burst::for_each_word(n, [&](const Word& x) { classes[burst::vt_syndrome(x)].push_back(x.to_string()); });
    for (std::size_t a = 0; a <= n; ++a)
      burst::for_each_word(n - 1, [&](const Word& y) {
        const auto pre = oracle::supersequences(classes[a], y.to_string());
        ASSERT_LE(pre.size(), 1u);
        if (pre.empty()) return;
        const auto r = burst::vt_decode(y, {n, a});
        ASSERT_EQ(r.word.to_string(), pre[0]);
        ASSERT_GE(r.window.first, 1u);
        ASSERT_LE(r.window.last, n);
        // the window is a run of the restored word
        for (std::size_t p = r.window.first; p <= r.window.last; ++p) ASSERT_EQ(r.word.bit(p), r.word.bit(r.window.first));
      });
  }
}

TEST(Vt, BestRllParameter) {
  const auto best = burst::vt_best_rll_param(8, 4);
  EXPECT_EQ(best.a, 0u);
  EXPECT_EQ(best.cardinality, 26u);
  const std::uint64_t frozen[][2] = {{4, 3}, {6, 9}, {8, 26}, {10, 86}, {12, 277}, {14, 926}};
  for (const auto& [n, card] : frozen) {
    const std::size_t f = burst::ceil_log2(2 * n);
    const auto b = burst::vt_best_rll_param(n, f);
    EXPECT_EQ(b.cardinality, card);
    EXPECT_GE(b.cardinality * (n + 1), burst::rll_count({n, f}));
  }
}

TEST(Vt, RllClassesPartitionTheRllSet) {
  for (std::size_t n = 4; n <= 12; ++n) {
    const std::size_t f = burst::ceil_log2(2 * n);
    std::uint64_t total = 0;
    burst::for_each_word(n, [&](const Word& x) {
      std::size_t hits = 0;
      for (std::size_t a = 0; a <= n; ++a) hits += burst::vt_rll_member(x, {n, a}, f);
      ASSERT_EQ(hits, burst::max_run(x) <= f ? 1u : 0u);
      total += hits;
    });
    EXPECT_EQ(total, burst::rll_count({n, f}));
  }
}
