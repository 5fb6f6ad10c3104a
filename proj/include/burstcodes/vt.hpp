#pragma once

// Varshamov-Tenengolts codes VT_a(n) = { x : sum i*x_i = a (mod n+1) } and
// their run-length-limited subcodes VT_{a,f}(n).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "burstcodes/decode_result.hpp"
#include "burstcodes/error.hpp"
#include "burstcodes/word.hpp"

namespace burst {

struct VtParams {
  std::size_t n = 0;
  std::size_t a = 0;  // 0 <= a <= n
};

inline void check(const VtParams& p) {
  detail::require(p.n >= 1 && p.n <= kMaxWordLength, "VT length out of range");
  detail::require(p.a <= p.n, "VT residue must satisfy 0 <= a <= n");
}

inline std::size_t vt_syndrome(const Word& x) { return static_cast<std::size_t>(weighted_sum(x) % (x.size() + 1)); }

inline bool vt_member(const Word& x, const VtParams& p) {
  check(p);
  detail::require(x.size() == p.n, "word length does not match VT length");
  return vt_syndrome(x) == p.a;
}

inline bool vt_rll_member(const Word& x, const VtParams& p, std::size_t f) {
  return vt_member(x, p) && max_run(x) <= f;
}

/// Corrects one deletion in y (length n-1). The returned window is the run of
/// the restored word holding the re-inserted symbol.
inline DecodeResult vt_decode(const Word& y, const VtParams& p) {
  check(p);
  detail::require(y.size() + 1 == p.n, "VT decoder expects a word of length n-1");
  const std::uint64_t mod = p.n + 1;
  const std::uint64_t s = (p.a + mod - weighted_sum(y) % mod) % mod;
  const std::size_t w = y.weight();

  // Walk insertion slots left to right, counting ones to the right / zeros to the left.
  std::size_t pos = 0;
  int bit = 0;
  if (s <= w) {
    // 0 goes where exactly s ones lie to its right.
    std::size_t ones_right = w;
    for (std::size_t k = 1; k <= y.size() + 1; ++k) {
      if (ones_right == s) { pos = k; break; }
      if (y.bit(k) == 1) --ones_right;
    }
  } else {
    bit = 1;
    const std::size_t zeros_left = static_cast<std::size_t>(s - w - 1);
    std::size_t zeros = 0;
    for (std::size_t k = 1; k <= y.size() + 1; ++k) {
      if (zeros == zeros_left) { pos = k; break; }
      if (y.bit(k) == 0) ++zeros;
    }
  }
  if (pos == 0) throw DecodeFailure("VT decoding found no insertion slot");
  const Word x = y.insert_bit(pos, bit);
  const Run run = runs(x).run_at(pos);
  return DecodeResult{x, Interval{run.start, run.start + run.length - 1},
                      "deleted " + std::to_string(bit) + " restored in run [" + std::to_string(run.start) + "," +
                          std::to_string(run.start + run.length - 1) + "]"};
}

struct VtBest {
  std::size_t a = 0;
  std::uint64_t cardinality = 0;
};

/// Residue a maximizing |VT_{a,f}(n)|; ties go to the smallest a.
inline VtBest vt_best_rll_param(std::size_t n, std::size_t f) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  for_each_word(n, [&](const Word& x) {
    if (max_run(x) <= f) ++hist[vt_syndrome(x)];
  });
  VtBest best;
  for (std::size_t a = 0; a <= n; ++a)
    if (hist[a] > best.cardinality) best = {a, hist[a]};
  return best;
}

}  // namespace burst
