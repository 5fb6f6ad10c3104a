#pragma once

// Binary words, run decomposition and the column-major array view A_b(x).
//
// Positions are 1-indexed throughout the public interface: bit(1) is the
// leftmost symbol of the text form. Internally a word of length n is kept as
// an n-digit binary number whose most significant digit is position 1, so
// numeric order of equal-length words is lexicographic order.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burstcodes/error.hpp"

namespace burst {

inline constexpr std::size_t kMaxWordLength = 64;
/// Largest n for which {0,1}^n may be swept exhaustively.
inline constexpr std::size_t kMaxEnumerationLength = 30;

namespace detail {

constexpr std::uint64_t low_mask(std::size_t k) noexcept {
  return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

constexpr std::uint64_t shl(std::uint64_t v, std::size_t k) noexcept {
  return k >= 64 ? 0 : v << k;
}

constexpr std::uint64_t shr(std::uint64_t v, std::size_t k) noexcept {
  return k >= 64 ? 0 : v >> k;
}

}  // namespace detail

class Word {
 public:
  Word() = default;

  /// `bits` holds the word as an n-digit binary number (position 1 = MSB).
  Word(std::size_t n, std::uint64_t bits) : bits_(bits & detail::low_mask(n)), size_(static_cast<std::uint8_t>(n)) {
    detail::require(n <= kMaxWordLength, "word length exceeds 64");
  }

  static Word zeros(std::size_t n) { return Word(n, 0); }
  static Word ones(std::size_t n) { return Word(n, detail::low_mask(n)); }

  static Word parse(std::string_view text) {
    detail::require(!text.empty(), "empty word");
    detail::require(text.size() <= kMaxWordLength, "word longer than 64 symbols");
    std::uint64_t v = 0;
    for (char ch : text) {
      detail::require(ch == '0' || ch == '1', "word contains a symbol other than '0'/'1'");
      v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    return Word(text.size(), v);
  }

  static Word from_bits(std::span<const int> bits) {
    detail::require(bits.size() <= kMaxWordLength, "word longer than 64 symbols");
    std::uint64_t v = 0;
    for (int b : bits) {
      detail::require(b == 0 || b == 1, "bit outside {0,1}");
      v = (v << 1) | static_cast<std::uint64_t>(b);
    }
    return Word(bits.size(), v);
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::uint64_t value() const noexcept { return bits_; }

  /// Symbol at 1-indexed position `pos`.
  int bit(std::size_t pos) const noexcept { return static_cast<int>((bits_ >> (size_ - pos)) & 1U); }

  int at(std::size_t pos) const {
    detail::require(pos >= 1 && pos <= size_, "position out of range");
    return bit(pos);
  }

  Word with_bit(std::size_t pos, int b) const {
    detail::require(pos >= 1 && pos <= size_, "position out of range");
    const std::uint64_t m = std::uint64_t{1} << (size_ - pos);
    return Word(size_, b ? (bits_ | m) : (bits_ & ~m));
  }

  std::size_t weight() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  /// Removes positions first..first+len-1.
  Word erase(std::size_t first, std::size_t len = 1) const {
    detail::require(first >= 1 && len <= size_ && first + len - 1 <= size_, "erase range out of bounds");
    const std::size_t tail = size_ - (first + len - 1);
    const std::uint64_t high = detail::shr(bits_, tail + len);
    const std::uint64_t low = bits_ & detail::low_mask(tail);
    return Word(size_ - len, detail::shl(high, tail) | low);
  }

  /// Inserts `block` so that its first symbol lands at position `pos` (1 <= pos <= n+1).
  Word insert(std::size_t pos, const Word& block) const {
    detail::require(pos >= 1 && pos <= size_ + 1U, "insert position out of bounds");
    detail::require(size_ + block.size() <= kMaxWordLength, "word length exceeds 64");
    const std::size_t tail = size_ - (pos - 1);
    const std::uint64_t high = detail::shr(bits_, tail);
    const std::uint64_t low = bits_ & detail::low_mask(tail);
    const std::size_t m = size_ + block.size();
    return Word(m, detail::shl(high, tail + block.size()) | detail::shl(block.value(), tail) | low);
  }

  Word insert_bit(std::size_t pos, int b) const { return insert(pos, Word(1, b ? 1U : 0U)); }

  Word append(const Word& tail) const { return insert(size_ + 1U, tail); }

  /// Positions first..first+len-1 as a new word.
  Word slice(std::size_t first, std::size_t len) const {
    detail::require(first >= 1 && first + len - 1 <= size_, "slice out of bounds");
    if (len == 0) return Word();
    const std::size_t tail = size_ - (first + len - 1);
    return Word(len, (bits_ >> tail) & detail::low_mask(len));
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 1; i <= size_; ++i) s[i - 1] = static_cast<char>('0' + bit(i));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Lexicographic order with '0' < '1'; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept {
    const std::size_t common = x.size_ < y.size_ ? x.size_ : y.size_;
    const std::uint64_t xp = detail::shr(x.bits_, x.size_ - common);
    const std::uint64_t yp = detail::shr(y.bits_, y.size_ - common);
    if (xp != yp) return xp <=> yp;
    return x.size_ <=> y.size_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = w.value() * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(w.size()) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Number of runs r(x); 0 for the empty word.
inline std::size_t run_count(const Word& x) noexcept {
  if (x.size() <= 1) return x.size();
  const std::uint64_t v = x.value();
  const std::uint64_t changes = (v ^ (v >> 1)) & detail::low_mask(x.size() - 1);
  return 1 + static_cast<std::size_t>(std::popcount(changes));
}

inline std::size_t max_run(const Word& x) noexcept {
  std::size_t best = 0;
  std::size_t cur = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur = (i > 1 && x.bit(i) == x.bit(i - 1)) ? cur + 1 : 1;
    if (cur > best) best = cur;
  }
  return best;
}

/// Weighted checksum sum_i i*x_i.
inline std::uint64_t weighted_sum(const Word& x) noexcept {
  std::uint64_t v = x.value();
  std::uint64_t s = 0;
  const std::size_t n = x.size();
  while (v) {
    const int k = std::countr_zero(v);
    s += n - static_cast<std::size_t>(k);
    v &= v - 1;
  }
  return s;
}

struct Run {
  int value = 0;
  std::size_t start = 0;   // 1-indexed
  std::size_t length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

struct RunProfile {
  std::vector<Run> runs;
  std::size_t total_runs() const noexcept { return runs.size(); }

  /// The run containing 1-indexed position `pos`.
  const Run& run_at(std::size_t pos) const {
    for (const auto& r : runs)
      if (pos >= r.start && pos < r.start + r.length) return r;
    throw DomainError("position outside word");
  }
};

inline RunProfile runs(const Word& x) {
  RunProfile p;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    if (i == 1 || x.bit(i) != x.bit(i - 1))
      p.runs.push_back(Run{x.bit(i), i, 1});
    else
      ++p.runs.back().length;
  }
  return p;
}

/// The b x (n/b) array A_b(x), entry(r, j) = x_{(j-1)b + r}.
struct ArrayRep {
  std::vector<Word> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
  std::size_t cols() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
  /// 1-indexed row and column.
  int entry(std::size_t r, std::size_t j) const { return rows.at(r - 1).at(j); }
  const Word& row(std::size_t r) const { return rows.at(r - 1); }
};

namespace detail {

// Row r of the column-major view, for any n (rows may differ in length by one).
inline Word strided_row(const Word& x, std::size_t b, std::size_t r) {
  std::uint64_t v = 0;
  std::size_t len = 0;
  for (std::size_t p = r; p <= x.size(); p += b) {
    v = (v << 1) | static_cast<std::uint64_t>(x.bit(p));
    ++len;
  }
  return Word(len, v);
}

}  // namespace detail

inline ArrayRep array_view(const Word& x, std::size_t b) {
  detail::require(b >= 1, "array view needs b >= 1");
  detail::require(x.size() % b == 0, "b must divide the word length");
  ArrayRep a;
  a.rows.reserve(b);
  for (std::size_t r = 1; r <= b; ++r) a.rows.push_back(detail::strided_row(x, b, r));
  return a;
}

/// Row r of A_b(x) without materializing the other rows.
inline Word array_row(const Word& x, std::size_t b, std::size_t r) {
  detail::require(b >= 1 && x.size() % b == 0, "b must divide the word length");
  detail::require(r >= 1 && r <= b, "row index out of range");
  return detail::strided_row(x, b, r);
}

inline Word flatten(const ArrayRep& a) {
  const std::size_t b = a.row_count();
  if (b == 0) return Word();
  const std::size_t cols = a.cols();
  for (const auto& row : a.rows) detail::require(row.size() == cols, "ragged array");
  detail::require(b * cols <= kMaxWordLength, "flattened word exceeds 64 symbols");
  std::uint64_t v = 0;
  for (std::size_t j = 1; j <= cols; ++j)
    for (std::size_t r = 0; r < b; ++r) v = (v << 1) | static_cast<std::uint64_t>(a.rows[r].bit(j));
  return Word(b * cols, v);
}

/// Visits every word of length n in lexicographic order.
template <class F>
void for_each_word(std::size_t n, F&& f) {
  detail::require(n >= 1 && n <= kMaxEnumerationLength, "exhaustive sweep needs 1 <= n <= 30");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < end; ++v) f(Word(n, v));
}

}  // namespace burst

template <>
struct std::hash<burst::Word> : burst::WordHash {};
