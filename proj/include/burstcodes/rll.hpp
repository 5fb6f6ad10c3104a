#pragma once

// Run-length-limited words: the f-RLL(n) set S_n(f), the universal constraint
// U_{n,b}(f) on the first row of every A_i view (3 <= i <= b), and a
// one-redundant-bit encoder capping runs at ceil(log2 n) + 3.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "burstcodes/error.hpp"
#include "burstcodes/word.hpp"

namespace burst {

/// ceil(log2(v)) for v >= 1.
constexpr std::size_t ceil_log2(std::uint64_t v) {
  std::size_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < v) ++k;
  return k;
}

struct RllSpec {
  std::size_t n = 0;
  std::size_t f = 0;  // longest admissible run
};

inline bool rll_member(const Word& x, std::size_t f) { return max_run(x) <= f; }

/// |S_n(f)| via the composition recurrence: runs are parts of size <= f.
inline std::uint64_t rll_count(const RllSpec& spec) {
  detail::require(spec.n >= 1 && spec.n <= 63, "rll_count supports 1 <= n <= 63");
  detail::require(spec.f >= 1, "run cap must be positive");
  std::vector<std::uint64_t> comp(spec.n + 1, 0);
  comp[0] = 1;
  for (std::size_t k = 1; k <= spec.n; ++k)
    for (std::size_t j = 1; j <= spec.f && j <= k; ++j) comp[k] += comp[k - j];
  return 2 * comp[spec.n];
}

/// N_b = ceil(log2(n * log2 b)) + 1, the default run cap of the universal constraint.
inline std::size_t urll_default_cap(std::size_t n, std::size_t b) {
  detail::require(b >= 2 && n >= 1, "N_b needs b >= 2");
  if (std::has_single_bit(b)) {
    const auto lb = static_cast<std::uint64_t>(std::countr_zero(b));
    return ceil_log2(n * lb) + 1;
  }
  // n*log2(b) is irrational here, so no boundary case can be misrounded.
  return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n) * std::log2(static_cast<double>(b))))) +
         1;
}

struct UrllSpec {
  std::size_t n = 0;
  std::size_t b = 0;
  std::size_t f = 0;

  static UrllSpec with_default_cap(std::size_t n, std::size_t b) { return {n, b, urll_default_cap(n, b)}; }
};

inline void check(const UrllSpec& s) {
  detail::require(s.b >= 3, "universal RLL needs b >= 3");
  for (std::size_t i = 3; i <= s.b; ++i) detail::require(s.n % i == 0, "every 3 <= i <= b must divide n");
}

inline bool urll_member(const Word& x, const UrllSpec& spec) {
  check(spec);
  detail::require(x.size() == spec.n, "word length does not match spec");
  for (std::size_t i = 3; i <= spec.b; ++i)
    if (max_run(array_row(x, i, 1)) > spec.f) return false;
  return true;
}

inline std::uint64_t urll_count(const UrllSpec& spec) {
  check(spec);
  std::uint64_t count = 0;
  for_each_word(spec.n, [&](const Word& x) { count += urll_member(x, spec) ? 1 : 0; });
  return count;
}

namespace detail {

inline std::size_t rll_log_n(std::size_t n) {
  require(n >= 2, "run-length encoder needs n >= 2");
  return ceil_log2(n);
}

inline std::size_t run_from(const std::vector<int>& y, std::size_t i) {
  std::size_t k = i;
  while (k + 1 < y.size() && y[k + 1] == y[i]) ++k;
  return k - i + 1;
}

}  // namespace detail

/// Maximum run length guaranteed by rll_encode for inputs of length n.
inline std::size_t rll_encoder_cap(std::size_t n) { return detail::rll_log_n(n) + 3; }

/// State of the encoder after one run reduction.
struct RllStep {
  std::size_t position = 0;  // scan position i where the long run starts
  Word word;                 // working word after the reduction
  std::size_t scan_end = 0;  // scan end after the reduction
};

/// Maps x (length n) to a length n+1 word whose runs are at most ceil(log2 n)+3,
/// recording every reduction. A run of length >= L+4 (L = ceil(log2 n)) starting
/// at scan position i loses L+3 of its symbols, and the block (1, bin_L(i), 0, 1)
/// is appended on the right.
inline std::pair<Word, std::vector<RllStep>> rll_encode_traced(const Word& x) {
  const std::size_t n = x.size();
  detail::require(n + 1 <= kMaxWordLength, "run-length encoder supports n <= 63");
  const std::size_t L = detail::rll_log_n(n);
  const std::size_t block = L + 3;

  // 0-indexed working copy; y[0..] mirrors positions 1..
  std::vector<int> y;
  y.reserve(n + 1);
  for (std::size_t p = 1; p <= n; ++p) y.push_back(x.bit(p));
  y.push_back(0);

  std::vector<RllStep> steps;
  std::size_t i = 1;
  std::size_t end = n;
  while (i <= end) {
    if (detail::run_from(y, i - 1) >= block + 1) {
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(i - 1), y.begin() + static_cast<std::ptrdiff_t>(i - 1 + block));
      y.push_back(1);
      for (std::size_t k = L; k-- > 0;) y.push_back(static_cast<int>(i >> k & 1U));
      y.push_back(0);
      y.push_back(1);
      end -= block;
      steps.push_back({i, Word::from_bits(y), end});
    } else {
      ++i;
    }
  }
  return {Word::from_bits(y), std::move(steps)};
}

inline Word rll_encode(const Word& x) { return rll_encode_traced(x).first; }

/// Inverse of rll_encode.
inline Word rll_decode(const Word& y) {
  detail::require(y.size() >= 3, "encoded word too short");
  const std::size_t n = y.size() - 1;
  const std::size_t L = detail::rll_log_n(n);
  const std::size_t block = L + 3;
  Word cur = y;
  // Each pass strips one appended block; there are at most n / block of them.
  for (std::size_t pass = 0; cur.bit(cur.size()) == 1; ++pass) {
    if (pass > n / block) throw DecodeFailure("too many trailing blocks");
    if (cur.size() < block + 1) throw DecodeFailure("malformed trailing block");
    const std::size_t head = cur.size() - block;
    if (cur.bit(head + 1) != 1 || cur.bit(cur.size() - 1) != 0) throw DecodeFailure("malformed trailing block");
    const std::size_t pos = static_cast<std::size_t>(cur.slice(head + 2, L).value());
    if (pos < 1 || pos > head) throw DecodeFailure("trailing block points outside the word");
    const Word prefix = cur.slice(1, head);
    const int v = prefix.bit(pos);
    cur = prefix.insert(pos, v ? Word::ones(block) : Word::zeros(block));
  }
  return cur.slice(1, n);
}

}  // namespace burst
