#pragma once

#include <cstddef>
#include <string>

#include "burstcodes/word.hpp"

namespace burst {

/// Inclusive 1-indexed position interval; the default is empty.
struct Interval {
  std::size_t first = 1;
  std::size_t last = 0;
  std::size_t length() const noexcept { return last >= first ? last - first + 1 : 0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct DecodeResult {
  Word word;
  /// Positions of `word` that may have carried the corrected symbol(s).
  Interval window;
  std::string detail;
};

}  // namespace burst
