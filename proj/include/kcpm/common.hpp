#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcpm {

using i64 = std::int64_t;

// Raised when a caller violates a documented precondition.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Raised when an internally certified property does not hold.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Reporting returns every position; decision returns any one of them.
enum class Mode { report, decide };

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

inline i64 mod(i64 a, i64 q) {
  i64 r = a % q;
  return r < 0 ? r + q : r;
}

inline i64 ceil_div(i64 a, i64 b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
inline i64 floor_div(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// a ≡_d b (mod q): the cyclic residue distance of a-b is at most d.
inline bool approx_congruent(i64 a, i64 b, i64 d, i64 q) {
  i64 r = mod(a - b, q);
  return std::min(r, q - r) <= d;
}

}  // namespace kcpm
