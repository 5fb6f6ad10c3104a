#pragma once

// Brute-force ground truth: ball-disjointness verification, deletion/insertion
// equivalence, unique-preimage decoding, greedy codes and a burst channel.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "burstcodes/balls.hpp"
#include "burstcodes/codes.hpp"
#include "burstcodes/decode_result.hpp"
#include "burstcodes/error.hpp"
#include "burstcodes/svt.hpp"
#include "burstcodes/word.hpp"

namespace burst {

/// Largest length for the pairwise equivalence scan.
inline constexpr std::size_t kMaxEquivalenceLength = 10;
/// Largest length for greedy code construction.
inline constexpr std::size_t kMaxGreedyLength = 16;

struct Violation {
  Word first;
  Word second;
  Word common;
};

struct VerifyReport {
  std::string model;
  std::string codebook_id;
  std::uint64_t pairs_checked = 0;
  std::vector<Violation> violations;
  bool passed = true;
};

inline std::string models_name(std::span<const ErrorModel> models) {
  std::string s;
  for (const auto& m : models) {
    if (!s.empty()) s += '+';
    s += model_name(m);
  }
  return s;
}

namespace detail {

// Distinct key for words of any length up to 63: a leading sentinel bit.
inline std::uint64_t length_key(const Word& z) {
  require(z.size() < 64, "word too long for a keyed index");
  return (std::uint64_t{1} << z.size()) | z.value();
}

// (key of a corrupted word, index of its source) for every source and model.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> ball_incidence(std::span<const Word> sources,
                                                                           std::span<const ErrorModel> models) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> inc;
  std::vector<Word> zs;
  for (std::uint32_t i = 0; i < sources.size(); ++i) {
    zs.clear();
    for (const auto& m : models) {
      const auto part = ball(sources[i], m);
      zs.insert(zs.end(), part.begin(), part.end());
    }
    sort_unique(zs);
    for (const auto& z : zs) inc.emplace_back(length_key(z), i);
  }
  std::sort(inc.begin(), inc.end());
  return inc;
}

}  // namespace detail

/// Checks every unordered codeword pair for a shared word in the union of the
/// balls of `models`. Exact. One violation is listed per offending pair.
inline VerifyReport verify_code(const Codebook& cb, std::span<const ErrorModel> models) {
  detail::require(!models.empty(), "verification needs at least one error model");
  VerifyReport r;
  r.model = models_name(models);
  r.codebook_id = cb.label;
  const std::uint64_t m = cb.words.size();
  r.pairs_checked = m * (m - (m ? 1 : 0)) / 2;
  const auto inc = detail::ball_incidence(cb.words, models);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].first == inc[i].first) ++j;
    for (std::size_t p = i; p < j; ++p)
      for (std::size_t q = p + 1; q < j; ++q) seen.emplace_back(inc[p].second, inc[q].second);
    i = j;
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (const auto& [a, b] : seen) {
    // Recover one common word for the report.
    std::vector<Word> za, zb;
    for (const auto& mdl : models) {
      const auto ba = ball(cb.words[a], mdl);
      const auto bb = ball(cb.words[b], mdl);
      za.insert(za.end(), ba.begin(), ba.end());
      zb.insert(zb.end(), bb.begin(), bb.end());
    }
    detail::sort_unique(za);
    detail::sort_unique(zb);
    std::vector<Word> common;
    std::set_intersection(za.begin(), za.end(), zb.begin(), zb.end(), std::back_inserter(common));
    r.violations.push_back({cb.words[a], cb.words[b], common.front()});
  }
  r.passed = r.violations.empty();
  return r;
}

inline VerifyReport verify_code(const Codebook& cb, const ErrorModel& m) {
  return verify_code(cb, std::span<const ErrorModel>(&m, 1));
}

/// Models a family must be verified against: its target channel, plus a single
/// deletion for the (2,1)-burst family.
inline std::vector<ErrorModel> verification_models(Family f, std::size_t b) {
  if (f == Family::C21) return {ErrorModel::burst21(), ErrorModel::del_exact(1)};
  return {target_model(f, b)};
}

enum class Flavor { Exact, AtMostCons, AtMostNonCons };

inline std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Exact: return "exact";
    case Flavor::AtMostCons: return "at-most-cons";
    case Flavor::AtMostNonCons: return "at-most-noncons";
  }
  return "?";
}

inline Flavor parse_flavor(std::string_view s) {
  for (Flavor f : {Flavor::Exact, Flavor::AtMostCons, Flavor::AtMostNonCons})
    if (flavor_name(f) == s) return f;
  throw DomainError("unknown flavor '" + std::string(s) + "'");
}

inline ErrorModel deletion_model(Flavor f, std::size_t b) {
  switch (f) {
    case Flavor::Exact: return ErrorModel::del_exact(b);
    case Flavor::AtMostCons: return ErrorModel::del_at_most(b);
    case Flavor::AtMostNonCons: return ErrorModel::del_non_consecutive(b);
  }
  throw DomainError("unknown flavor");
}

struct EquivalenceResult {
  std::size_t n = 0;
  std::size_t b = 0;
  Flavor flavor = Flavor::Exact;
  std::uint64_t deletion_conflicts = 0;   // unordered pairs with intersecting deletion balls
  std::uint64_t insertion_conflicts = 0;  // same for insertion balls
  std::uint64_t mismatches = 0;           // pairs conflicting under exactly one of the two
  bool equivalent() const noexcept { return mismatches == 0; }
};

namespace detail {

// Bit (x, y) set iff x < y have intersecting balls.
inline std::vector<bool> conflict_pairs(std::size_t n, const ErrorModel& m) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<Word> all;
  all.reserve(size);
  for (std::uint64_t v = 0; v < size; ++v) all.emplace_back(n, v);
  const auto inc = ball_incidence(all, std::span<const ErrorModel>(&m, 1));
  std::vector<bool> bits(size * size, false);
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].first == inc[i].first) ++j;
    for (std::size_t p = i; p < j; ++p)
      for (std::size_t q = p + 1; q < j; ++q) bits[inc[p].second * size + inc[q].second] = true;
    i = j;
  }
  return bits;
}

}  // namespace detail

/// For every pair x != y in {0,1}^n compares deletion-ball and insertion-ball
/// intersection under the flavor.
inline EquivalenceResult equivalence_check(std::size_t n, std::size_t b, Flavor flavor) {
  detail::require(n <= kMaxEquivalenceLength, "equivalence scan needs n <= 10");
  const ErrorModel del = deletion_model(flavor, b);
  check_model(del, n);
  const auto d = detail::conflict_pairs(n, del);
  const auto ins = detail::conflict_pairs(n, del.mirrored());
  EquivalenceResult r{n, b, flavor};
  for (std::size_t k = 0; k < d.size(); ++k) {
    r.deletion_conflicts += d[k];
    r.insertion_conflicts += ins[k];
    r.mismatches += d[k] != ins[k];
  }
  return r;
}

/// Maps every corrupted word to the codewords whose balls contain it.
class BallIndex {
 public:
  BallIndex(const Codebook& cb, std::span<const ErrorModel> models) : words_(cb.words) {
    for (std::uint32_t i = 0; i < words_.size(); ++i) {
      index_[detail::length_key(words_[i])].push_back(i);
      for (const auto& m : models)
        for (const auto& z : ball(words_[i], m)) {
          auto& v = index_[detail::length_key(z)];
          if (v.empty() || v.back() != i) v.push_back(i);
        }
    }
  }

  /// The unique codeword explaining y; a codeword itself decodes to itself.
  DecodeResult decode(const Word& y) const {
    const auto it = index_.find(detail::length_key(y));
    if (it == index_.end()) throw DecodeFailure("no codeword explains " + y.to_string());
    if (it->second.size() > 1)
      throw CodeIntegrityError("received word " + y.to_string() + " lies in " + std::to_string(it->second.size()) +
                               " codeword balls");
    const Word& x = words_[it->second.front()];
    if (x.size() == y.size()) return {x, Interval{}, "no error"};
    return {x, detail::change_window(x, y), "oracle"};
  }

 private:
  std::vector<Word> words_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
};

inline DecodeResult oracle_decode(const Codebook& cb, const Word& y, const ErrorModel& m) {
  return BallIndex(cb, std::span<const ErrorModel>(&m, 1)).decode(y);
}

/// Lexicographic greedy code: keep each word whose ball misses all kept balls.
inline Codebook greedy_code(std::size_t n, const ErrorModel& m) {
  detail::require(n <= kMaxGreedyLength, "greedy construction needs n <= 16");
  check_model(m, n);
  Codebook cb;
  cb.n = n;
  cb.label = "greedy-" + model_name(m) + "-n" + std::to_string(n);
  std::unordered_set<Word> used;
  for_each_word(n, [&](const Word& x) {
    const auto bx = ball(x, m);
    for (const auto& z : bx)
      if (used.count(z)) return;
    used.insert(bx.begin(), bx.end());
    cb.words.push_back(x);
  });
  return cb;
}

struct PBoundedReport {
  std::uint64_t codewords = 0;
  std::uint64_t conflicts = 0;        // codeword pairs sharing y with deletions <= P-1 apart
  std::uint64_t decoder_cases = 0;    // (x, deletion position, window start) triples
  std::uint64_t decoder_failures = 0;
  bool passed() const noexcept { return conflicts == 0 && decoder_failures == 0; }
};

/// Exhaustive check that SVT_{c,d}(n,P) corrects one deletion known to lie in
/// P consecutive positions, both combinatorially and through svt_decode.
inline PBoundedReport svt_p_bounded_check(const SvtParams& p) {
  check(p);
  detail::require(p.n >= 2 && p.n <= 20, "P-bounded check supports 2 <= n <= 20");
  PBoundedReport r;
  // y -> (codeword, deletion position) pairs
  std::unordered_map<Word, std::vector<std::pair<Word, std::size_t>>> hits;
  for_each_word(p.n, [&](const Word& x) {
    if (!svt_member(x, p)) return;
    ++r.codewords;
    for (std::size_t i = 1; i <= p.n; ++i) {
      const Word y = x.erase(i);
      hits[y].emplace_back(x, i);
      const std::size_t u_lo = i + 1 > p.P ? i + 1 - p.P : 1;
      for (std::size_t u = u_lo; u <= i; ++u) {
        ++r.decoder_cases;
        try {
          if (svt_decode(y, p, u).word != x) ++r.decoder_failures;
        } catch (const DecodeFailure&) {
          ++r.decoder_failures;
        }
      }
    }
  });
  for (const auto& [y, list] : hits) {
    std::vector<std::pair<Word, Word>> bad;
    for (const auto& [x1, i1] : list)
      for (const auto& [x2, i2] : list)
        if (x1 < x2 && (i1 > i2 ? i1 - i2 : i2 - i1) + 1 <= p.P) bad.emplace_back(x1, x2);
    std::sort(bad.begin(), bad.end());
    r.conflicts += static_cast<std::uint64_t>(std::unique(bad.begin(), bad.end()) - bad.begin());
  }
  return r;
}

/// One admissible error event. Positions are 1-indexed in the transmitted word
/// (deletions) or in the received word (insertions).
struct ChannelEvent {
  ErrorModel model;
  std::size_t start = 0;
  std::uint32_t mask = 0;  // bit k flags position start + k
  Word inserted;           // inserted symbols, in order
  std::uint64_t seed = 0;

  std::string to_string() const {
    std::string s = model_name(model) + " start=" + std::to_string(start) + " pattern=";
    const std::size_t width = model.kind == ErrorKind::Burst21 ? 2 : static_cast<std::size_t>(std::bit_width(mask));
    for (std::size_t k = 0; k < width; ++k) s += (mask >> k & 1U) ? '1' : '0';
    if (!inserted.empty()) s += " inserted=" + inserted.to_string();
    s += " seed=" + std::to_string(seed);
    return s;
  }
};

/// Every admissible (start, pattern) event of model m on a word of length n.
inline std::vector<ChannelEvent> admissible_events(std::size_t n, const ErrorModel& m) {
  check_model(m, n);
  std::vector<ChannelEvent> ev;
  const std::size_t b = m.b;
  const std::uint32_t full = (1U << b) - 1;
  auto with_fills = [&](std::size_t start, std::uint32_t mask) {
    const std::size_t a = static_cast<std::size_t>(std::popcount(mask));
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << a); ++f) ev.push_back({m, start, mask, Word(a, f)});
  };
  switch (m.kind) {
    case ErrorKind::DelExact:
      for (std::size_t s = 1; s + b <= n + 1; ++s) ev.push_back({m, s, full, {}});
      break;
    case ErrorKind::DelAtMostConsecutive:
      for (std::size_t a = 1; a <= b; ++a)
        for (std::size_t s = 1; s + a <= n + 1; ++s) ev.push_back({m, s, (1U << a) - 1, {}});
      break;
    case ErrorKind::DelAtMostNonConsecutive:
      for (std::size_t s = 1; s + b <= n + 1; ++s)
        for (std::uint32_t mask = 1; mask <= full; ++mask) ev.push_back({m, s, mask, {}});
      break;
    case ErrorKind::InsExact:
      for (std::size_t s = 1; s <= n + 1; ++s) with_fills(s, full);
      break;
    case ErrorKind::InsAtMostConsecutive:
      for (std::size_t a = 1; a <= b; ++a)
        for (std::size_t s = 1; s <= n + 1; ++s) with_fills(s, (1U << a) - 1);
      break;
    case ErrorKind::InsAtMostNonConsecutive:
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::size_t a = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t s = 1; s + b <= n + a + 1; ++s) with_fills(s, mask);
      }
      break;
    case ErrorKind::Burst21:
      for (std::size_t s = 1; s + 1 <= n; ++s) with_fills(s, 1U);
      for (auto& e : ev) e.mask = 3;
      break;
  }
  return ev;
}

/// Applies one event to x.
inline Word apply_event(const Word& x, const ChannelEvent& e) {
  switch (e.model.kind) {
    case ErrorKind::DelExact:
    case ErrorKind::DelAtMostConsecutive:
    case ErrorKind::DelAtMostNonConsecutive:
      return detail::erase_mask(x, e.start, e.mask, static_cast<std::size_t>(std::bit_width(e.mask)));
    case ErrorKind::Burst21:
      return x.erase(e.start, 2).insert(e.start, e.inserted);
    default:
      return detail::interleave(x, e.start, e.mask, static_cast<std::size_t>(std::bit_width(e.mask)), e.inserted);
  }
}

/// Draws one event uniformly from admissible_events(x.size(), m) using mt19937_64(seed).
inline std::pair<Word, ChannelEvent> apply_error(const Word& x, const ErrorModel& m, std::uint64_t seed) {
  const auto events = admissible_events(x.size(), m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, events.size() - 1);
  ChannelEvent e = events[pick(rng)];
  e.seed = seed;
  return {apply_event(x, e), e};
}

}  // namespace burst
