#pragma once

// Error balls for the burst channels and the counting formulas around them.
//
// Balls hold corrupted words only: the "at most b" models range over
// 1 <= a <= b deletions (or insertions); a = 0 is never part of a ball.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burstcodes/error.hpp"
#include "burstcodes/word.hpp"

namespace burst {

enum class ErrorKind {
  DelExact,
  DelAtMostConsecutive,
  DelAtMostNonConsecutive,
  InsExact,
  InsAtMostConsecutive,
  InsAtMostNonConsecutive,
  Burst21,
};

struct ErrorModel {
  ErrorKind kind = ErrorKind::DelExact;
  std::size_t b = 1;

  static ErrorModel del_exact(std::size_t b) { return {ErrorKind::DelExact, b}; }
  static ErrorModel del_at_most(std::size_t b) { return {ErrorKind::DelAtMostConsecutive, b}; }
  static ErrorModel del_non_consecutive(std::size_t b) { return {ErrorKind::DelAtMostNonConsecutive, b}; }
  static ErrorModel ins_exact(std::size_t b) { return {ErrorKind::InsExact, b}; }
  static ErrorModel ins_at_most(std::size_t b) { return {ErrorKind::InsAtMostConsecutive, b}; }
  static ErrorModel ins_non_consecutive(std::size_t b) { return {ErrorKind::InsAtMostNonConsecutive, b}; }
  static ErrorModel burst21() { return {ErrorKind::Burst21, 2}; }

  bool is_insertion() const noexcept {
    return kind == ErrorKind::InsExact || kind == ErrorKind::InsAtMostConsecutive ||
           kind == ErrorKind::InsAtMostNonConsecutive;
  }

  /// The insertion model mirroring a deletion model (and vice versa).
  ErrorModel mirrored() const {
    switch (kind) {
      case ErrorKind::DelExact: return ins_exact(b);
      case ErrorKind::DelAtMostConsecutive: return ins_at_most(b);
      case ErrorKind::DelAtMostNonConsecutive: return ins_non_consecutive(b);
      case ErrorKind::InsExact: return del_exact(b);
      case ErrorKind::InsAtMostConsecutive: return del_at_most(b);
      case ErrorKind::InsAtMostNonConsecutive: return del_non_consecutive(b);
      case ErrorKind::Burst21: break;
    }
    throw DomainError("the (2,1)-burst model has no insertion mirror");
  }

  friend bool operator==(const ErrorModel&, const ErrorModel&) = default;
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DelExact: return "del-exact";
    case ErrorKind::DelAtMostConsecutive: return "del-at-most-cons";
    case ErrorKind::DelAtMostNonConsecutive: return "del-at-most-noncons";
    case ErrorKind::InsExact: return "ins-exact";
    case ErrorKind::InsAtMostConsecutive: return "ins-at-most-cons";
    case ErrorKind::InsAtMostNonConsecutive: return "ins-at-most-noncons";
    case ErrorKind::Burst21: return "burst21";
  }
  return "?";
}

inline ErrorKind parse_kind(std::string_view s) {
  for (auto k : {ErrorKind::DelExact, ErrorKind::DelAtMostConsecutive, ErrorKind::DelAtMostNonConsecutive,
                 ErrorKind::InsExact, ErrorKind::InsAtMostConsecutive, ErrorKind::InsAtMostNonConsecutive,
                 ErrorKind::Burst21})
    if (kind_name(k) == s) return k;
  throw DomainError("unknown error model '" + std::string(s) + "'");
}

inline std::string model_name(const ErrorModel& m) {
  if (m.kind == ErrorKind::Burst21) return "burst21";
  return std::string(kind_name(m.kind)) + "(" + std::to_string(m.b) + ")";
}

/// Throws unless model `m` can act on a word of length n.
inline void check_model(const ErrorModel& m, std::size_t n) {
  detail::require(m.b >= 1, "burst size must be at least 1");
  if (m.kind == ErrorKind::Burst21) {
    detail::require(n >= 3, "(2,1)-burst needs length >= 3");
    return;
  }
  detail::require(n > m.b, "word must be longer than the burst size");
  if (m.is_insertion()) detail::require(n + m.b <= kMaxWordLength, "insertion would exceed 64 symbols");
}

namespace detail {

// Deletes the positions flagged in `mask` (bit k = position window_start + k).
inline Word erase_mask(const Word& x, std::size_t window_start, std::uint32_t mask, std::size_t width) {
  Word y = x;
  for (std::size_t k = width; k-- > 0;)
    if (mask >> k & 1U) y = y.erase(window_start + k);
  return y;
}

// Builds a word of length x.size() + popcount(mask) in which the flagged
// positions (bit k = position window_start + k) carry `fill` and the rest
// carry x in order.
inline Word interleave(const Word& x, std::size_t window_start, std::uint32_t mask, std::size_t width,
                       const Word& fill) {
  const std::size_t m = x.size() + fill.size();
  std::uint64_t v = 0;
  std::size_t xi = 1;
  std::size_t fi = 1;
  for (std::size_t p = 1; p <= m; ++p) {
    const bool inserted = p >= window_start && p < window_start + width && (mask >> (p - window_start) & 1U);
    const int bit = inserted ? fill.bit(fi++) : x.bit(xi++);
    v = (v << 1) | static_cast<std::uint64_t>(bit);
  }
  return Word(m, v);
}

inline void sort_unique(std::vector<Word>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// Every word reachable from x by one error event of model `m`, sorted and deduplicated.
inline std::vector<Word> ball(const Word& x, const ErrorModel& m) {
  const std::size_t n = x.size();
  check_model(m, n);
  const std::size_t b = m.b;
  std::vector<Word> out;
  switch (m.kind) {
    case ErrorKind::DelExact:
      for (std::size_t s = 1; s + b - 1 <= n; ++s) out.push_back(x.erase(s, b));
      break;
    case ErrorKind::DelAtMostConsecutive:
      for (std::size_t a = 1; a <= b; ++a)
        for (std::size_t s = 1; s + a - 1 <= n; ++s) out.push_back(x.erase(s, a));
      break;
    case ErrorKind::DelAtMostNonConsecutive:
      for (std::size_t s = 1; s + b - 1 <= n; ++s)
        for (std::uint32_t mask = 1; mask < (1U << b); ++mask) out.push_back(detail::erase_mask(x, s, mask, b));
      break;
    case ErrorKind::InsExact:
    case ErrorKind::InsAtMostConsecutive: {
      const std::size_t lo = m.kind == ErrorKind::InsExact ? b : 1;
      for (std::size_t a = lo; a <= b; ++a)
        for (std::size_t pos = 1; pos <= n + 1; ++pos)
          for (std::uint64_t f = 0; f < (std::uint64_t{1} << a); ++f) out.push_back(x.insert(pos, Word(a, f)));
      break;
    }
    case ErrorKind::InsAtMostNonConsecutive:
      for (std::uint32_t mask = 1; mask < (1U << b); ++mask) {
        const auto a = static_cast<std::size_t>(std::popcount(mask));
        const std::size_t len = n + a;
        for (std::size_t s = 1; s + b - 1 <= len; ++s)
          for (std::uint64_t f = 0; f < (std::uint64_t{1} << a); ++f)
            out.push_back(detail::interleave(x, s, mask, b, Word(a, f)));
      }
      break;
    case ErrorKind::Burst21:
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        const Word y = x.erase(i, 2);
        out.push_back(y.insert_bit(i, 0));
        out.push_back(y.insert_bit(i, 1));
      }
      break;
  }
  detail::sort_unique(out);
  return out;
}

/// D_{2,1}^{(b1,b2)->a}(x): delete an adjacent pair equal to (b1,b2), insert `a` in its place.
inline std::vector<Word> burst21_restricted(const Word& x, int b1, int b2, int a) {
  check_model(ErrorModel::burst21(), x.size());
  std::vector<Word> out;
  for (std::size_t i = 1; i + 1 <= x.size(); ++i)
    if (x.bit(i) == b1 && x.bit(i + 1) == b2) out.push_back(x.erase(i, 2).insert_bit(i, a));
  detail::sort_unique(out);
  return out;
}

/// |D_b(x)| = 1 + sum_i (r(A_b(x)_i) - 1).
inline std::size_t ball_size_formula(const Word& x, std::size_t b) {
  detail::require(b >= 1 && x.size() % b == 0, "b must divide n");
  detail::require(x.size() > b, "need n > b");
  std::size_t size = 1;
  for (std::size_t r = 1; r <= b; ++r) size += run_count(array_row(x, b, r)) - 1;
  return size;
}

/// Binomial coefficient; exact for all arguments used with n <= 62.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  return r;
}

/// M(n, r) = 2*C(n-1, r-1): words of length n with exactly r runs.
inline std::uint64_t words_with_runs(std::size_t n, std::size_t r) {
  if (n == 0 || r == 0 || r > n) return 0;
  return 2 * binomial(n - 1, r - 1);
}

/// N(n, b, i) = 2^b * C(n-b, i-1).
inline std::uint64_t ball_size_count(std::size_t n, std::size_t b, std::size_t i) {
  if (i == 0 || i > n - b + 1) return 0;
  return (std::uint64_t{1} << b) * binomial(n - b, i - 1);
}

struct BallSizeCount {
  std::size_t i = 0;
  std::uint64_t formula = 0;
  std::optional<std::uint64_t> enumerated;
};

struct BallSizeDistribution {
  std::size_t n = 0;
  std::size_t b = 0;
  std::vector<BallSizeCount> counts;  // i = 1 .. n-b+1

  bool consistent() const {
    return std::all_of(counts.begin(), counts.end(),
                       [](const BallSizeCount& c) { return !c.enumerated || *c.enumerated == c.formula; });
  }
};

/// Formula values for N(n,b,i); with `enumerate`, also the tally of |D_b(x)| over {0,1}^n
/// computed from the generated balls.
inline BallSizeDistribution ball_size_distribution(std::size_t n, std::size_t b, bool enumerate = true) {
  detail::require(b >= 1 && n > b && n % b == 0, "need b | n and n > b");
  detail::require(n <= 62, "distribution supports n <= 62");
  BallSizeDistribution d{n, b, {}};
  for (std::size_t i = 1; i <= n - b + 1; ++i) d.counts.push_back({i, ball_size_count(n, b, i), std::nullopt});
  if (enumerate) {
    std::vector<std::uint64_t> tally(n - b + 2, 0);
    for_each_word(n, [&](const Word& x) { ++tally[ball(x, ErrorModel::del_exact(b)).size()]; });
    for (auto& c : d.counts) c.enumerated = tally[c.i];
  }
  return d;
}

}  // namespace burst
