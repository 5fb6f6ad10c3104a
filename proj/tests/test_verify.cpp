#include <gtest/gtest.h>

#include <cmath>

#include "burstcodes/verify.hpp"
#include "oracles.hpp"

using namespace burst;

namespace {

Codebook raw(std::vector<std::string> words) {
  Codebook cb;
  for (const auto& w : words) cb.words.push_back(Word::parse(w));
  std::sort(cb.words.begin(), cb.words.end());
  cb.n = cb.words.front().size();
  cb.label = "test";
  return cb;
}

}  // namespace

TEST(Verify, ConstantWordsAreDisjoint) {
  for (std::size_t b = 1; b < 6; ++b) {
    const auto r = verify_code(raw({"000000", "111111"}), ErrorModel::del_exact(b));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.pairs_checked, 1u);
  }
}

TEST(Verify, ReportsTheCommonWord) {
  const auto r = verify_code(raw({"00000", "00001"}), ErrorModel::del_exact(1));
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].common.to_string(), "0000");
}

TEST(Verify, AgreesWithPairwiseOracle) {
  // Random-ish small codebooks: compare against direct set intersection.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::set<std::string> pick;
    while (pick.size() < 6) pick.insert(oracle::bits(rng() % 256, 8));
    const Codebook cb = raw({pick.begin(), pick.end()});
    for (std::size_t b = 1; b <= 3; ++b) {
      std::size_t bad = 0;
      for (auto i = pick.begin(); i != pick.end(); ++i)
        for (auto j = std::next(i); j != pick.end(); ++j) {
          const auto bi = oracle::del_non_consecutive(*i, b);
          const auto bj = oracle::del_non_consecutive(*j, b);
          bad += std::any_of(bi.begin(), bi.end(), [&](const std::string& z) { return bj.count(z) > 0; });
        }
      EXPECT_EQ(verify_code(cb, ErrorModel::del_non_consecutive(b)).violations.size(), bad);
    }
  }
}

TEST(Verify, BestBurstExactPasses) {
  const Codebook cb = build_best(Family::BurstExact, 12, 3);
  EXPECT_TRUE(verify_code(cb, ErrorModel::del_exact(3)).passed);
  EXPECT_TRUE(verify_code(cb, ErrorModel::ins_exact(3)).passed);
}

TEST(Verify, EquivalenceExamples) {
  EXPECT_TRUE(equivalence_check(8, 2, Flavor::Exact).equivalent());
  EXPECT_TRUE(equivalence_check(9, 3, Flavor::AtMostCons).equivalent());
  EXPECT_TRUE(equivalence_check(8, 3, Flavor::AtMostNonCons).equivalent());
  EXPECT_THROW(equivalence_check(11, 2, Flavor::Exact), DomainError);
  const auto r = equivalence_check(6, 1, Flavor::Exact);
  EXPECT_GT(r.deletion_conflicts, 0u);
  EXPECT_EQ(r.deletion_conflicts, r.insertion_conflicts);
}

TEST(Verify, OracleDecode) {
  const Codebook cb = build_best(Family::BurstExact, 8, 2);
  const ErrorModel m = ErrorModel::del_at_most(2);
  EXPECT_EQ(oracle_decode(cb, cb.words[0], m).word, cb.words[0]);
  EXPECT_THROW(oracle_decode(cb, Word::parse("0000000000"), m), DecodeFailure);
  const Codebook clash = raw({"00000", "00001"});
  EXPECT_THROW(oracle_decode(clash, Word::parse("0000"), ErrorModel::del_exact(1)), CodeIntegrityError);
  for (const auto& x : cb.words)
    for (const auto& y : ball(x, ErrorModel::del_exact(2)))
      EXPECT_EQ(oracle_decode(cb, y, ErrorModel::del_exact(2)).word, x);
}

TEST(Verify, GreedyCodes) {
  const Codebook g4 = greedy_code(4, ErrorModel::del_exact(1));
  EXPECT_EQ(g4.size(), 4u);
  EXPECT_EQ(g4.words[1].to_string(), "0011");
  const Codebook g8 = greedy_code(8, ErrorModel::del_exact(2));
  EXPECT_EQ(g8.size(), 17u);
  EXPECT_LE(g8.size(), 24u);
  const Codebook g10 = greedy_code(10, ErrorModel::del_exact(2));
  EXPECT_EQ(g10.size(), 46u);
  EXPECT_LE(static_cast<double>(g10.size()), std::floor(to_double(upper_bound(10, 2))));
  EXPECT_TRUE(verify_code(g10, ErrorModel::del_exact(2)).passed);
  EXPECT_THROW(greedy_code(17, ErrorModel::del_exact(2)), DomainError);
}

TEST(Verify, ChannelEvents) {
  for (const auto& m : {ErrorModel::del_exact(3), ErrorModel::del_at_most(3), ErrorModel::del_non_consecutive(3)}) {
    const auto [y, e] = apply_error(Word::zeros(10), m, 99);
    EXPECT_EQ(y, Word::zeros(10 - std::popcount(e.mask)));
  }
  const Word x = Word::parse("0110100111");
  for (const auto& m : {ErrorModel::del_exact(2), ErrorModel::del_at_most(3), ErrorModel::del_non_consecutive(4),
                        ErrorModel::ins_exact(2), ErrorModel::ins_at_most(3), ErrorModel::ins_non_consecutive(3),
                        ErrorModel::burst21()}) {
    const auto b = ball(x, m);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto [y, e] = apply_error(x, m, seed);
      ASSERT_TRUE(std::binary_search(b.begin(), b.end(), y)) << model_name(m) << ' ' << e.to_string();
      const auto [y2, e2] = apply_error(x, m, seed);
      ASSERT_EQ(y, y2);
      ASSERT_EQ(e.to_string(), e2.to_string());
    }
    // every admissible event lands in the ball and the ball is covered
    std::vector<Word> hit;
    for (const auto& e : admissible_events(x.size(), m)) hit.push_back(apply_event(x, e));
    detail::sort_unique(hit);
    EXPECT_EQ(hit, b) << model_name(m);
  }
}
