#pragma once

// Composite burst-correcting code families.
//
// Every family is a partition-style family: a word's component residues form
// its parameter tuple ("class"), and the code with parameters p is the set of
// words whose class equals p. Words violating a family's fixed constraints
// (run caps, shared SVT residues, Cheng's all-VT_0 rows) belong to no class.
//
// Parameter tuple layouts (flat, in this order):
//   cheng1        : (empty)
//   burst-exact   : a, c, d            row 1 in VT_{a,ceil(log 2n/b)}(n/b),
//                                      rows 2..b in SVT_{c,d}(n/b, ceil(log n/b)+2)
//   cl2           : a0, a, c, d        x in VT_{a0}(n), plus burst-exact(b=2)
//   at-most-cons  : cl2 tuple, then (a_i, c_i, d_i) for each level 3 <= i <= b
//   c21           : a, c               sum i*x_i = a (mod 2n-1), wt(x) = c (mod 4)
//   noncons3      : a1, (a, c, d), (a2, c2), (a3, c3)
//   noncons4      : a1, (a, c, d), two A_2 row pairs, three A_3 row pairs

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "burstcodes/balls.hpp"
#include "burstcodes/bounds.hpp"
#include "burstcodes/decode_result.hpp"
#include "burstcodes/error.hpp"
#include "burstcodes/parallel.hpp"
#include "burstcodes/rll.hpp"
#include "burstcodes/svt.hpp"
#include "burstcodes/vt.hpp"
#include "burstcodes/word.hpp"

namespace burst {

/// Largest length for which codebooks are built by sweeping {0,1}^n.
inline constexpr std::size_t kMaxBuildLength = 26;

enum class Family { Cheng1, BurstExact, AtMostConsecutive, C21, NonCons3, NonCons4, CL2Substitute };

inline constexpr std::array kAllFamilies = {Family::Cheng1,   Family::BurstExact, Family::AtMostConsecutive,
                                            Family::C21,      Family::NonCons3,   Family::NonCons4,
                                            Family::CL2Substitute};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cheng1: return "cheng1";
    case Family::BurstExact: return "burst-exact";
    case Family::AtMostConsecutive: return "at-most-cons";
    case Family::C21: return "c21";
    case Family::NonCons3: return "noncons3";
    case Family::NonCons4: return "noncons4";
    case Family::CL2Substitute: return "cl2";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : kAllFamilies)
    if (family_name(f) == s) return f;
  throw DomainError("unknown code family '" + std::string(s) + "'");
}

/// The burst parameter a family is defined for; `b` is only free for
/// cheng1, burst-exact and at-most-cons.
inline std::size_t canonical_b(Family f, std::size_t b) {
  switch (f) {
    case Family::C21: return 1;
    case Family::CL2Substitute: return 2;
    case Family::NonCons3: return 3;
    case Family::NonCons4: return 4;
    default: return b;
  }
}

/// The channel a family is designed to correct.
inline ErrorModel target_model(Family f, std::size_t b) {
  switch (f) {
    case Family::Cheng1:
    case Family::BurstExact: return ErrorModel::del_exact(b);
    case Family::AtMostConsecutive: return ErrorModel::del_at_most(b);
    case Family::CL2Substitute: return ErrorModel::del_at_most(2);
    case Family::C21: return ErrorModel::burst21();
    case Family::NonCons3: return ErrorModel::del_non_consecutive(3);
    case Family::NonCons4: return ErrorModel::del_non_consecutive(4);
  }
  throw DomainError("unknown family");
}

class ParamTuple {
 public:
  static constexpr std::size_t kCapacity = 16;

  ParamTuple() = default;
  ParamTuple(std::initializer_list<std::size_t> values) {
    for (auto v : values) push(v);
  }

  void push(std::size_t v) {
    detail::require(size_ < kCapacity, "too many parameters");
    detail::require(v <= std::numeric_limits<std::uint16_t>::max(), "parameter value too large");
    v_[size_++] = static_cast<std::uint16_t>(v);
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t operator[](std::size_t i) const noexcept { return v_[i]; }

  friend bool operator==(const ParamTuple& x, const ParamTuple& y) noexcept {
    return std::equal(x.v_.begin(), x.v_.begin() + x.size_, y.v_.begin(), y.v_.begin() + y.size_);
  }

  friend std::strong_ordering operator<=>(const ParamTuple& x, const ParamTuple& y) noexcept {
    return std::lexicographical_compare_three_way(x.v_.begin(), x.v_.begin() + x.size_, y.v_.begin(),
                                                  y.v_.begin() + y.size_);
  }

  /// "1,0,0"; "none" for the empty tuple.
  std::string to_string() const {
    if (size_ == 0) return "none";
    std::string s;
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ',';
      s += std::to_string(v_[i]);
    }
    return s;
  }

  static ParamTuple parse(std::string_view text) {
    ParamTuple t;
    if (text.empty() || text == "none") return t;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      const std::string_view tok = text.substr(start, comma - start);
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw DomainError("malformed parameter list '" + std::string(text) + "'");
      t.push(v);
      start = comma + 1;
    }
    return t;
  }

 private:
  std::array<std::uint16_t, kCapacity> v_{};
  std::uint8_t size_ = 0;
};

struct CodeSpec {
  Family family = Family::BurstExact;
  std::size_t n = 0;
  std::size_t b = 0;
  ParamTuple params;
  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// Geometry of one "exact burst" layer: A_b view, first-row run cap and SVT span.
struct BurstGeometry {
  std::size_t b = 0;
  std::size_t cols = 0;
  std::size_t run_cap = 0;
  std::size_t span = 0;
};

/// Row 1 in VT_{a, ceil(log2(2n/b))}(n/b); rows 2..b in SVT(n/b, ceil(log2(n/b)) + 2).
inline BurstGeometry burst_exact_geometry(std::size_t n, std::size_t b) {
  detail::require(b >= 2 && n % b == 0 && n > b, "burst-exact needs b >= 2, b | n and n > b");
  const std::size_t cols = n / b;
  return {b, cols, ceil_log2(2 * cols), ceil_log2(cols) + 2};
}

/// Level i of the at-most construction: run cap N_b on row 1, SVT span N_b + 1.
inline BurstGeometry level_geometry(std::size_t n, std::size_t b, std::size_t i) {
  const std::size_t cap = urll_default_cap(n, b);
  return {i, n / i, cap, cap + 1};
}

namespace detail {

inline std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

inline void push_radices(std::vector<std::size_t>& r, const BurstGeometry& g) {
  r.push_back(g.cols + 1);
  r.push_back(g.span);
  r.push_back(2);
}

// Appends (a, c, d) for x under geometry g; false if x belongs to no class.
inline bool push_burst_class(const Word& x, const BurstGeometry& g, ParamTuple& out) {
  const Word first = array_row(x, g.b, 1);
  if (max_run(first) > g.run_cap) return false;
  out.push(vt_syndrome(first));
  std::size_t c = 0;
  std::size_t d = 0;
  for (std::size_t r = 2; r <= g.b; ++r) {
    const Word row = array_row(x, g.b, r);
    const std::size_t cr = static_cast<std::size_t>(weighted_sum(row) % g.span);
    const std::size_t dr = row.weight() % 2;
    if (r == 2) {
      c = cr;
      d = dr;
    } else if (cr != c || dr != d) {
      return false;
    }
  }
  out.push(c);
  out.push(d);
  return true;
}

inline void push_c21_class(const Word& x, ParamTuple& out) {
  out.push(static_cast<std::size_t>(weighted_sum(x) % (2 * x.size() - 1)));
  out.push(x.weight() % 4);
}

}  // namespace detail

/// Validated per-(family, n, b) geometry plus the classifier defining membership.
class CodeLayout {
 public:
  static CodeLayout make(Family family, std::size_t n, std::size_t b) {
    CodeLayout L;
    L.family_ = family;
    L.n_ = n;
    L.b_ = canonical_b(family, b);
    detail::require(n >= 2 && n <= kMaxWordLength, "code length must lie in [2, 64]");
    auto& r = L.radices_;
    switch (family) {
      case Family::Cheng1:
        detail::require(L.b_ >= 1 && n % L.b_ == 0 && n > L.b_, "cheng1 needs b | n and n > b");
        break;
      case Family::BurstExact:
        L.exact_ = burst_exact_geometry(n, L.b_);
        detail::push_radices(r, L.exact_);
        break;
      case Family::CL2Substitute:
        L.exact_ = burst_exact_geometry(n, 2);
        r.push_back(n + 1);
        detail::push_radices(r, L.exact_);
        break;
      case Family::AtMostConsecutive:
        detail::require(L.b_ >= 2 && L.b_ <= 4, "at-most-cons supports 2 <= b <= 4");
        detail::require(n % detail::factorial(L.b_) == 0 && n > L.b_, "at-most-cons needs b! | n");
        L.exact_ = burst_exact_geometry(n, 2);
        r.push_back(n + 1);
        detail::push_radices(r, L.exact_);
        for (std::size_t i = 3; i <= L.b_; ++i) {
          L.levels_.push_back(level_geometry(n, L.b_, i));
          detail::push_radices(r, L.levels_.back());
        }
        break;
      case Family::C21:
        detail::require(n >= 4, "c21 needs n >= 4");
        r = {2 * n - 1, 4};
        break;
      case Family::NonCons3:
        detail::require(n % 6 == 0 && n >= 12, "noncons3 needs 6 | n and n >= 12");
        L.exact_ = burst_exact_geometry(n, 3);
        r.push_back(n + 1);
        detail::push_radices(r, L.exact_);
        for (int k = 0; k < 2; ++k) r.insert(r.end(), {n - 1, 4});
        break;
      case Family::NonCons4:
        detail::require(n % 24 == 0, "noncons4 needs 24 | n");
        L.exact_ = burst_exact_geometry(n, 4);
        r.push_back(n + 1);
        detail::push_radices(r, L.exact_);
        for (int k = 0; k < 2; ++k) r.insert(r.end(), {n - 1, 4});
        for (int k = 0; k < 3; ++k) r.insert(r.end(), {2 * n / 3 - 1, 4});
        break;
    }
    return L;
  }

  Family family() const noexcept { return family_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t b() const noexcept { return b_; }
  const std::vector<std::size_t>& radices() const noexcept { return radices_; }
  const BurstGeometry& exact() const noexcept { return exact_; }
  const std::vector<BurstGeometry>& levels() const noexcept { return levels_; }

  /// Parameter tuple of the class containing x, or nullopt if x is in no class.
  std::optional<ParamTuple> classify(const Word& x) const {
    detail::require(x.size() == n_, "word length does not match the code length");
    ParamTuple t;
    switch (family_) {
      case Family::Cheng1:
        for (std::size_t r = 1; r <= b_; ++r)
          if (vt_syndrome(array_row(x, b_, r)) != 0) return std::nullopt;
        return t;
      case Family::BurstExact:
        if (!detail::push_burst_class(x, exact_, t)) return std::nullopt;
        return t;
      case Family::CL2Substitute:
      case Family::AtMostConsecutive:
        t.push(vt_syndrome(x));
        if (!detail::push_burst_class(x, exact_, t)) return std::nullopt;
        for (const auto& g : levels_)
          if (!detail::push_burst_class(x, g, t)) return std::nullopt;
        return t;
      case Family::C21:
        detail::push_c21_class(x, t);
        return t;
      case Family::NonCons3:
      case Family::NonCons4:
        t.push(vt_syndrome(x));
        if (!detail::push_burst_class(x, exact_, t)) return std::nullopt;
        for (std::size_t r = 1; r <= 2; ++r) detail::push_c21_class(array_row(x, 2, r), t);
        if (family_ == Family::NonCons4)
          for (std::size_t r = 1; r <= 3; ++r) detail::push_c21_class(array_row(x, 3, r), t);
        return t;
    }
    return std::nullopt;
  }

  void validate(const ParamTuple& p) const {
    detail::require(p.size() == radices_.size(), std::string(family_name(family_)) + " expects " +
                                                     std::to_string(radices_.size()) + " parameters, got " +
                                                     std::to_string(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k)
      detail::require(p[k] < radices_[k], "parameter " + std::to_string(k + 1) + " out of range (must be < " +
                                              std::to_string(radices_[k]) + ")");
  }

  /// Number of classes; throws if it does not fit in 64 bits.
  std::uint64_t class_count() const {
    std::uint64_t total = 1;
    for (auto r : radices_) {
      detail::require(total <= std::numeric_limits<std::uint64_t>::max() / r, "class space exceeds 64 bits");
      total *= r;
    }
    return total;
  }

  /// Mixed-radix index of a tuple; numeric order equals lexicographic tuple order.
  std::uint64_t class_key(const ParamTuple& p) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) k = k * radices_[i] + p[i];
    return k;
  }

  ParamTuple class_from_key(std::uint64_t k) const {
    std::vector<std::size_t> digits(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      digits[i] = static_cast<std::size_t>(k % radices_[i]);
      k /= radices_[i];
    }
    ParamTuple t;
    for (auto d : digits) t.push(d);
    return t;
  }

 private:
  Family family_ = Family::BurstExact;
  std::size_t n_ = 0;
  std::size_t b_ = 0;
  std::vector<std::size_t> radices_;
  BurstGeometry exact_;
  std::vector<BurstGeometry> levels_;
};

inline CodeLayout layout_of(const CodeSpec& spec) {
  CodeLayout L = CodeLayout::make(spec.family, spec.n, spec.b);
  L.validate(spec.params);
  return L;
}

/// Normalizes b for fixed-b families and validates the parameters.
inline CodeSpec make_spec(Family family, std::size_t n, std::size_t b, ParamTuple params) {
  CodeSpec s{family, n, canonical_b(family, b), params};
  layout_of(s);
  return s;
}

inline bool member(const CodeSpec& spec, const Word& x) {
  const CodeLayout L = layout_of(spec);
  detail::require(x.size() == spec.n, "word length does not match the code length");
  const auto cls = L.classify(x);
  return cls && *cls == spec.params;
}

struct Codebook {
  std::optional<CodeSpec> spec;
  std::string label;
  std::size_t n = 0;
  std::vector<Word> words;  // sorted, distinct

  std::size_t size() const noexcept { return words.size(); }

  /// n - log2|C|; +inf for an empty code.
  double redundancy() const {
    if (words.empty()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(n) - std::log2(static_cast<double>(words.size()));
  }

  bool contains(const Word& x) const { return std::binary_search(words.begin(), words.end(), x); }

  /// Index-based encoding: message m maps to the m-th codeword.
  const Word& encode(std::size_t message) const {
    detail::require(message < words.size(), "message index out of range");
    return words[message];
  }

  std::size_t message_of(const Word& x) const {
    const auto it = std::lower_bound(words.begin(), words.end(), x);
    if (it == words.end() || *it != x) throw DomainError("word is not a codeword");
    return static_cast<std::size_t>(it - words.begin());
  }
};

inline std::string spec_label(const CodeSpec& s) {
  return std::string(family_name(s.family)) + "(n=" + std::to_string(s.n) + ",b=" + std::to_string(s.b) +
         ",params=" + s.params.to_string() + ")";
}

/// All members of the code, by sweeping {0,1}^n.
inline Codebook build(const CodeSpec& spec) {
  const CodeLayout L = layout_of(spec);
  detail::require(spec.n <= kMaxBuildLength, "building by enumeration needs n <= 26");
  const std::uint64_t total = std::uint64_t{1} << spec.n;
  std::vector<std::vector<Word>> parts(detail::chunk_count(total));
  detail::parallel_chunks(total, [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
    auto& out = parts[chunk];
    for (std::uint64_t v = begin; v < end; ++v) {
      const Word x(spec.n, v);
      const auto cls = L.classify(x);
      if (cls && *cls == spec.params) out.push_back(x);
    }
  });
  Codebook cb{spec, spec_label(spec), spec.n, {}};
  for (auto& p : parts) cb.words.insert(cb.words.end(), p.begin(), p.end());
  return cb;
}

struct BestChoice {
  CodeSpec spec;
  std::uint64_t cardinality = 0;
};

/// The class of maximum cardinality; ties go to the lexicographically smallest tuple.
inline BestChoice best_params(Family family, std::size_t n, std::size_t b) {
  const CodeLayout L = CodeLayout::make(family, n, b);
  detail::require(n <= kMaxBuildLength, "parameter search by enumeration needs n <= 26");
  const std::uint64_t classes = L.class_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t chunks = detail::chunk_count(total);

  std::uint64_t best_key = 0;
  std::uint64_t best_count = 0;
  if (classes <= (std::uint64_t{1} << 16)) {
    std::vector<std::vector<std::uint64_t>> hist(chunks, std::vector<std::uint64_t>(classes, 0));
    detail::parallel_chunks(total, [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
      for (std::uint64_t v = begin; v < end; ++v)
        if (const auto cls = L.classify(Word(n, v))) ++hist[chunk][L.class_key(*cls)];
    });
    for (std::uint64_t k = 0; k < classes; ++k) {
      std::uint64_t c = 0;
      for (const auto& h : hist) c += h[k];
      if (c > best_count) best_key = k, best_count = c;
    }
  } else {
    std::vector<std::vector<std::uint64_t>> keys(chunks);
    detail::parallel_chunks(total, [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
      for (std::uint64_t v = begin; v < end; ++v)
        if (const auto cls = L.classify(Word(n, v))) keys[chunk].push_back(L.class_key(*cls));
    });
    std::vector<std::uint64_t> all;
    for (auto& k : keys) {
      all.insert(all.end(), k.begin(), k.end());
      std::vector<std::uint64_t>().swap(k);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j < all.size() && all[j] == all[i]) ++j;
      if (j - i > best_count) best_key = all[i], best_count = j - i;
      i = j;
    }
  }
  if (best_count == 0) throw DomainError("every parameter class of this family is empty");
  return {CodeSpec{family, n, L.b(), L.class_from_key(best_key)}, best_count};
}

inline Codebook build_best(Family family, std::size_t n, std::size_t b) { return build(best_params(family, n, b).spec); }

namespace detail {

// Restores one deletion in each row of A_g.b(y): VT on row 1 locates the
// deletion to a run, the other rows are SVT-decoded inside that window.
inline Word decode_burst_layer(const Word& y, const BurstGeometry& g, std::size_t a, std::size_t c, int d) {
  const ArrayRep rows = array_view(y, g.b);
  ArrayRep out;
  const DecodeResult first = vt_decode(rows.row(1), VtParams{g.cols, a});
  out.rows.push_back(first.word);
  const std::size_t u = first.window.first > 1 ? first.window.first - 1 : 1;
  if (first.window.last + 1 - u > g.span) throw DecodeFailure("row-1 run longer than the SVT span");
  for (std::size_t r = 2; r <= g.b; ++r)
    out.rows.push_back(svt_decode(rows.row(r), SvtParams{g.cols, g.span, c, d}, u).word);
  return flatten(out);
}

inline Interval change_window(const Word& x, const Word& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::size_t lcp = 0;
  while (lcp < m && x.bit(lcp + 1) == y.bit(lcp + 1)) ++lcp;
  std::size_t lcs = 0;
  while (lcs < m && x.bit(n - lcs) == y.bit(m - lcs)) ++lcs;
  const std::size_t lo = lcp + 1;
  const std::size_t hi = n > lcs ? n - lcs : 1;
  return {std::max<std::size_t>(1, std::min(lo, hi)), std::min(n, std::max(lo, hi))};
}

template <class Accept>
std::vector<Word> c21_candidates(const Word& y, Accept&& accept) {
  std::vector<Word> found;
  for (std::size_t p = 1; p <= y.size() + 1; ++p)
    for (int v = 0; v <= 1; ++v) {
      const Word x = y.insert_bit(p, v);
      if (accept(x)) found.push_back(x);
    }
  for (std::size_t p = 1; p <= y.size(); ++p)
    for (std::uint64_t pair = 0; pair < 4; ++pair) {
      const Word x = y.erase(p).insert(p, Word(2, pair));
      if (accept(x)) found.push_back(x);
    }
  sort_unique(found);
  return found;
}

template <class Accept>
std::vector<Word> non_consecutive_candidates(const Word& y, std::size_t n, std::size_t b, std::size_t a,
                                             Accept&& accept) {
  std::vector<Word> found;
  for (std::size_t s = 1; s + b - 1 <= n; ++s)
    for (std::uint32_t mask = 1; mask < (1U << b); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != a) continue;
      for (std::uint64_t f = 0; f < (std::uint64_t{1} << a); ++f) {
        const Word x = interleave(y, s, mask, b, Word(a, f));
        if (accept(x)) found.push_back(x);
      }
    }
  sort_unique(found);
  return found;
}

inline Word unique_candidate(const std::vector<Word>& found) {
  if (found.empty()) throw DecodeFailure("no codeword explains the received word");
  if (found.size() > 1) throw DecodeFailure("received word is ambiguous under this code");
  return found.front();
}

}  // namespace detail

/// Recovers the codeword from a word received through the family's target channel.
/// The number of deletions is read off the length of y; a word of full length is
/// returned unchanged if it is a codeword.
inline DecodeResult decode(const CodeSpec& spec, const Word& y) {
  const CodeLayout L = layout_of(spec);
  const std::size_t n = spec.n;
  const ParamTuple& p = spec.params;
  const auto accept = [&](const Word& x) {
    const auto cls = L.classify(x);
    return cls && *cls == p;
  };

  if (y.size() == n) {
    if (!accept(y)) throw DecodeFailure("full-length word is not a codeword");
    return {y, Interval{}, "no error"};
  }
  if (y.size() > n) throw DecodeFailure("received word longer than the code length");
  const std::size_t a = n - y.size();
  const ErrorModel model = target_model(spec.family, spec.b);

  Word x;
  switch (spec.family) {
    case Family::Cheng1: {
      if (a != spec.b) throw DecodeFailure("cheng1 corrects bursts of exactly b deletions");
      const ArrayRep rows = array_view(y, spec.b);
      ArrayRep out;
      for (const auto& row : rows.rows) out.rows.push_back(vt_decode(row, VtParams{n / spec.b, 0}).word);
      x = flatten(out);
      break;
    }
    case Family::BurstExact:
      if (a != spec.b) throw DecodeFailure("burst-exact corrects bursts of exactly b deletions");
      x = detail::decode_burst_layer(y, L.exact(), p[0], p[1], static_cast<int>(p[2]));
      break;
    case Family::CL2Substitute:
    case Family::AtMostConsecutive:
      if (a > spec.b) throw DecodeFailure("burst longer than the code corrects");
      if (a == 1) {
        x = vt_decode(y, VtParams{n, p[0]}).word;
      } else if (a == 2) {
        x = detail::decode_burst_layer(y, L.exact(), p[1], p[2], static_cast<int>(p[3]));
      } else {
        const std::size_t base = 4 + 3 * (a - 3);
        x = detail::decode_burst_layer(y, L.levels()[a - 3], p[base], p[base + 1], static_cast<int>(p[base + 2]));
      }
      break;
    case Family::C21:
      if (a != 1) throw DecodeFailure("c21 corrects one deletion or one (2,1)-burst");
      x = detail::unique_candidate(detail::c21_candidates(y, accept));
      break;
    case Family::NonCons3:
    case Family::NonCons4:
      if (a > spec.b) throw DecodeFailure("more deletions than the code corrects");
      if (a == 1) {
        x = vt_decode(y, VtParams{n, p[0]}).word;
      } else if (a == spec.b) {
        x = detail::decode_burst_layer(y, L.exact(), p[1], p[2], static_cast<int>(p[3]));
      } else {
        x = detail::unique_candidate(detail::non_consecutive_candidates(y, n, spec.b, a, accept));
      }
      break;
  }

  if (!accept(x)) throw DecodeFailure("decoded word is not a codeword");
  const auto b_of_x = ball(x, model);
  if (!std::binary_search(b_of_x.begin(), b_of_x.end(), y))
    throw DecodeFailure("decoded codeword does not explain the received word");
  return {x, detail::change_window(x, y), std::to_string(a) + " deletion(s) corrected"};
}

// ---------------------------------------------------------------------------
// Reports and codebook files

/// Key of the redundancy formula for each family in reference_redundancies().
inline std::string_view formula_key(Family f) {
  switch (f) {
    case Family::Cheng1: return "cheng1";
    case Family::BurstExact: return "burst_exact";
    case Family::AtMostConsecutive: return "at_most_cons";
    case Family::C21: return "c21";
    case Family::NonCons3: return "noncons3";
    case Family::NonCons4: return "noncons4";
    case Family::CL2Substitute: return "cl2";
  }
  return "";
}

struct RedundancyReport {
  CodeSpec spec;
  std::uint64_t cardinality = 0;
  double redundancy_measured = 0;
  double redundancy_formula = 0;
  std::optional<double> lower_bound;  // exact-b bound at the family's b
};

inline RedundancyReport redundancy_report(const Codebook& cb) {
  detail::require(cb.spec.has_value(), "redundancy report needs a constructed codebook");
  const CodeSpec& s = *cb.spec;
  RedundancyReport r{s, cb.size(), cb.redundancy(), 0, std::nullopt};
  const auto formulas = reference_redundancies(s.n, s.b);
  r.redundancy_formula = formulas.at(std::string(formula_key(s.family)));
  if (s.n + 1 > 2 * s.b) r.lower_bound = lower_bound_redundancy(s.n, s.b);
  return r;
}

inline void write_codebook(std::ostream& os, const Codebook& cb) {
  if (cb.spec)
    os << "# family=" << family_name(cb.spec->family) << " n=" << cb.spec->n << " b=" << cb.spec->b
       << " params=" << cb.spec->params.to_string() << '\n';
  else
    os << "# label=" << cb.label << " n=" << cb.n << '\n';
  for (const auto& w : cb.words) os << w << '\n';
}

/// Parses the codebook file format; constructed codebooks are re-checked for membership.
inline Codebook read_codebook(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw DomainError("codebook file lacks a '# ' header");
  std::istringstream hs(line.substr(2));
  std::string tok;
  std::optional<std::string> family, label, params;
  std::optional<std::size_t> n, b;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw DomainError("malformed header field '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "family") family = val;
    else if (key == "label") label = val;
    else if (key == "params") params = val;
    else if (key == "n") n = std::stoul(val);
    else if (key == "b") b = std::stoul(val);
    else throw DomainError("unknown header field '" + key + "'");
  }
  if (!n) throw DomainError("codebook header lacks n");
  Codebook cb;
  cb.n = *n;
  if (family) {
    if (!b || !params) throw DomainError("codebook header needs b and params");
    cb.spec = make_spec(parse_family(*family), *n, *b, ParamTuple::parse(*params));
    cb.label = spec_label(*cb.spec);
  } else {
    cb.label = label.value_or("codebook");
  }
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const Word w = Word::parse(line);
    if (w.size() != cb.n) throw DomainError("codeword length differs from header n");
    cb.words.push_back(w);
  }
  if (!std::is_sorted(cb.words.begin(), cb.words.end()) ||
      std::adjacent_find(cb.words.begin(), cb.words.end()) != cb.words.end())
    throw DomainError("codewords must be sorted and distinct");
  if (cb.spec) {
    const CodeLayout L = layout_of(*cb.spec);
    for (const auto& w : cb.words) {
      const auto cls = L.classify(w);
      if (!cls || *cls != cb.spec->params) throw DomainError("word " + w.to_string() + " is not a member");
    }
  }
  return cb;
}

}  // namespace burst
