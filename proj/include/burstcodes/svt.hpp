#pragma once

// Shifted VT codes SVT_{c,d}(n,P) = { x : sum i*x_i = c (mod P), wt(x) = d (mod 2) },
// correcting one deletion whose position is known to lie in P consecutive slots.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "burstcodes/decode_result.hpp"
#include "burstcodes/error.hpp"
#include "burstcodes/word.hpp"

namespace burst {

struct SvtParams {
  std::size_t n = 0;
  std::size_t P = 2;
  std::size_t c = 0;  // 0 <= c < P
  int d = 0;          // parity of the weight
};

inline void check(const SvtParams& p) {
  detail::require(p.n >= 1 && p.n <= kMaxWordLength, "SVT length out of range");
  detail::require(p.P >= 2, "SVT span P must be at least 2");
  detail::require(p.c < p.P, "SVT residue must satisfy 0 <= c < P");
  detail::require(p.d == 0 || p.d == 1, "SVT parity must be 0 or 1");
}

inline bool svt_member(const Word& x, const SvtParams& p) {
  check(p);
  detail::require(x.size() == p.n, "word length does not match SVT length");
  return weighted_sum(x) % p.P == p.c && static_cast<int>(x.weight() % 2) == p.d;
}

/// Intermediate quantities of one SVT decoding run.
struct SvtTrace {
  int deleted_value = 0;
  std::size_t augmented_sum = 0;  // a'
  std::size_t delta = 0;          // c - a' mod P
  Word uncertain;                 // y_u .. y_{u+P-2}, clipped at the end of y
  std::size_t insert_offset = 0;  // 1-indexed slot inside the uncertain segment
};

/// Decoder with its trace. `u` is the first position of x that may have been deleted.
inline std::pair<DecodeResult, SvtTrace> svt_decode_traced(const Word& y, const SvtParams& p, std::size_t u) {
  check(p);
  detail::require(y.size() + 1 == p.n, "SVT decoder expects a word of length n-1");
  detail::require(u >= 1 && u <= p.n, "first deletion candidate must lie in [1, n]");
  const std::size_t m = y.size();
  const std::size_t P = p.P;

  SvtTrace t;
  t.deleted_value = static_cast<int>((static_cast<std::size_t>(p.d) + y.weight()) % 2);
  const std::size_t seg_last = std::min(u + P - 2, m);
  t.uncertain = seg_last >= u ? y.slice(u, seg_last - u + 1) : Word();

  std::uint64_t sum = 0;
  for (std::size_t i = 1; i <= m; ++i)
    if (y.bit(i)) sum += i <= u + P - 2 ? i : i + 1;
  t.augmented_sum = static_cast<std::size_t>(sum % P);
  t.delta = (p.c + P - t.augmented_sum) % P;

  const Word& seg = t.uncertain;
  const std::size_t w = seg.weight();
  std::size_t slot = 0;
  if (t.deleted_value == 0) {
    // Slot with exactly delta ones to its right.
    std::size_t ones_right = w;
    for (std::size_t k = 1; k <= seg.size() + 1; ++k) {
      if (ones_right == t.delta) { slot = k; break; }
      if (seg.bit(k) == 1) --ones_right;
    }
  } else {
    // Slot with exactly (delta - u - wt) mod P zeros to its left.
    const std::size_t target = ((t.delta + 2 * P - u % P - w % P) % P);
    std::size_t zeros = 0;
    for (std::size_t k = 1; k <= seg.size() + 1; ++k) {
      if (zeros == target) { slot = k; break; }
      if (seg.bit(k) == 0) ++zeros;
    }
  }
  if (slot == 0) throw DecodeFailure("SVT decoding found no insertion slot (wrong window or corrupted input)");
  t.insert_offset = slot;

  const std::size_t pos = u + slot - 1;
  const Word x = y.insert_bit(pos, t.deleted_value);
  if (!svt_member(x, p)) throw DecodeFailure("SVT decoding produced a non-codeword");
  const Run run = runs(x).run_at(pos);
  DecodeResult r{x, Interval{run.start, run.start + run.length - 1},
                 "deleted " + std::to_string(t.deleted_value) + " restored at " + std::to_string(pos)};
  return {std::move(r), std::move(t)};
}

inline DecodeResult svt_decode(const Word& y, const SvtParams& p, std::size_t u) {
  return svt_decode_traced(y, p, u).first;
}

struct SvtBest {
  std::size_t c = 0;
  int d = 0;
  std::uint64_t cardinality = 0;
};

/// (c, d) maximizing |SVT_{c,d}(n,P)|, ties to the lexicographically smallest pair.
inline SvtBest svt_best_params(std::size_t n, std::size_t P) {
  detail::require(P >= 2, "SVT span P must be at least 2");
  std::vector<std::uint64_t> hist(2 * P, 0);
  for_each_word(n, [&](const Word& x) { ++hist[(weighted_sum(x) % P) * 2 + x.weight() % 2]; });
  SvtBest best;
  for (std::size_t k = 0; k < hist.size(); ++k)
    if (hist[k] > best.cardinality) best = {k / 2, static_cast<int>(k % 2), hist[k]};
  return best;
}

}  // namespace burst
