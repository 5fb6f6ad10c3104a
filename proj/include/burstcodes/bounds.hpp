#pragma once

// Cardinality bounds for b-burst-deletion-correcting codes and the reference
// redundancy formulas used in comparison tables.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burstcodes/balls.hpp"
#include "burstcodes/error.hpp"
#include "burstcodes/word.hpp"

namespace burst {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxTransversalLength = 22;

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {

inline BigInt pow2(std::size_t k) { return BigInt(1) << static_cast<unsigned>(k); }

inline void check_bound_domain(std::size_t n, std::size_t b) {
  require(b >= 1, "burst size must be at least 1");
  require(n + 1 > 2 * b, "bound needs n > 2b - 1");
}

}  // namespace detail

/// (2^{n-b+1} - 2^b) / (n - 2b + 1), exact.
inline Rational upper_bound(std::size_t n, std::size_t b) {
  detail::check_bound_domain(n, b);
  return Rational(detail::pow2(n - b + 1) - detail::pow2(b), BigInt(n - 2 * b + 1));
}

/// log2(n-2b+1) - log2(2^{1-b} - 2^{b-n}); equals n - log2(upper_bound(n, b)).
inline double lower_bound_redundancy(std::size_t n, std::size_t b) {
  detail::check_bound_domain(n, b);
  const long double nb = static_cast<long double>(n) - 2.0L * static_cast<long double>(b) + 1.0L;
  const long double inner = std::exp2(1.0L - static_cast<long double>(b)) -
                            std::exp2(static_cast<long double>(b) - static_cast<long double>(n));
  return static_cast<double>(std::log2(nb) - std::log2(inner));
}

/// Sum over v in {0,1}^{n-b} of 1/|D_b(v)|, exact. Ball sizes come from the
/// run-count formula when b divides n-b and from explicit balls otherwise.
inline Rational transversal_weight(std::size_t n, std::size_t b) {
  detail::check_bound_domain(n, b);
  const std::size_t m = n - b;
  detail::require(m <= kMaxTransversalLength, "transversal enumeration needs n - b <= 22");
  std::vector<std::uint64_t> tally(m + 2, 0);
  const bool use_formula = m % b == 0;
  for_each_word(m, [&](const Word& v) {
    // m == b: deleting everything leaves only the empty word.
    const std::size_t size = m == b        ? 1
                             : use_formula ? ball_size_formula(v, b)
                                           : ball(v, ErrorModel::del_exact(b)).size();
    ++tally[size];
  });
  Rational total = 0;
  for (std::size_t k = 1; k < tally.size(); ++k)
    if (tally[k]) total += Rational(BigInt(tally[k]), BigInt(k));
  return total;
}

/// Reference redundancies (bits) from the literature and the constructions here.
/// Entries whose formula is undefined at (n, b) are omitted.
inline std::map<std::string, double> reference_redundancies(std::size_t n, std::size_t b) {
  detail::require(n >= 2 && b >= 1, "need n >= 2 and b >= 1");
  std::map<std::string, double> f;
  const double N = static_cast<double>(n);
  const double B = static_cast<double>(b);
  const double logn = std::log2(N);
  const double loglogn = std::log2(logn);
  const double pairs = B * (B - 1) / 2;

  f["cheng1"] = B * std::log2(N / B + 1);
  f["cheng2"] = N / B + (B - 1) * std::log2(3.0);
  if (b >= 2) f["cheng3"] = N / B + 2 * std::log2(N / B + 1) + (B - 2) * std::log2(3.0);
  f["bours_cfc_min"] = N / B;
  f["burst_exact"] = logn + (B - 1) * loglogn + B - std::log2(B);
  if (b >= 2) f["at_most_cons"] = (B - 1) * logn + (pairs - 1) * loglogn + pairs + std::log2(std::log2(B));
  double baseline = std::log2(2 * N);
  for (std::size_t i = 3; i <= b; ++i) baseline += static_cast<double>(i) * std::log2(N / static_cast<double>(i) + 1);
  f["at_most_cons_baseline"] = baseline;
  f["cl2"] = 1 + logn;
  f["c21"] = std::log2(4 * (2 * N - 1));
  f["noncons3"] = 4 * logn + 2 * loglogn + 6;
  f["noncons4"] = 7 * logn + 2 * loglogn + 4;
  f["levenshtein_asymptotic"] = logn + B - 1;
  if (n + 1 > 2 * b) f["lower_bound"] = lower_bound_redundancy(n, b);
  return f;
}

struct BoundReport {
  std::size_t n = 0;
  std::size_t b = 0;
  Rational upper_bound_cardinality;
  double lower_bound_redundancy = 0;
  std::optional<Rational> transversal_weight_enumerated;
  std::map<std::string, double> formulas;

  bool transversal_matches() const {
    return !transversal_weight_enumerated || *transversal_weight_enumerated == upper_bound_cardinality;
  }
};

inline BoundReport bound_report(std::size_t n, std::size_t b, bool enumerate_transversal) {
  BoundReport r;
  r.n = n;
  r.b = b;
  r.upper_bound_cardinality = upper_bound(n, b);
  r.lower_bound_redundancy = burst::lower_bound_redundancy(n, b);
  if (enumerate_transversal && n - b <= kMaxTransversalLength) r.transversal_weight_enumerated = transversal_weight(n, b);
  r.formulas = reference_redundancies(n, b);
  return r;
}

}  // namespace burst
