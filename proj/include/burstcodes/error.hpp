#pragma once

#include <stdexcept>
#include <string>

namespace burst {

/// A precondition on lengths, divisibility or parameter ranges was violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The received word has no (or no unique) preimage under the given code.
class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two codewords of a supposedly verified code share a corrupted word.
class CodeIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace detail
}  // namespace burst
