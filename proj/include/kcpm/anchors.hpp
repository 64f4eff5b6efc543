#pragma once

#include <optional>
#include <vector>

#include "kcpm/intervals.hpp"
#include "kcpm/pillar.hpp"

namespace kcpm {

// Occurrences T[p .. p'] that are x-anchored at a fixed position i, for
// x = x0 .. x0+len-1, with p, p' and x advancing together. d1 and d2 are the
// length surpluses of the text over the pattern left and right of the anchor.
struct Triad {
  i64 p = 0;     // start of the first occurrence
  i64 last = 0;  // p' (inclusive end) of the first occurrence
  i64 x = 0;     // rotation of the first occurrence
  i64 len = 0;
  i64 d1 = 0;
  i64 d2 = 0;

  Interval starts() const { return Interval{p, p + len - 1}; }
  Interval ends() const { return Interval{last, last + len - 1}; }
  Interval rotations() const { return Interval{x, x + len - 1}; }
};

struct AnchoredSet {
  i64 anchor = 0;
  std::vector<Triad> triads;

  bool empty() const { return triads.empty(); }
  PositionSet starts() const;
};

// All circular k-edit occurrences of P in T that are x-anchored at i, with
// x restricted to `xwin` (default [0..m]). P may be any fragment, including a
// rotation taken from a registered P^3.
AnchoredSet anchored(const StringStore& st, const Frag& P, const Frag& T, i64 i, i64 k,
                     std::optional<Interval> xwin = std::nullopt);

// Some start anchored at a position of I, or nothing.
std::optional<i64> any_anchored(const StringStore& st, const Frag& P, const Frag& T, const Interval& I,
                                i64 k);

// Upper bound on the number of triads one anchor produces.
inline i64 triad_bound(i64 k) { return (k + 1) * (2 * k + 1) * (2 * k + 1); }

}  // namespace kcpm
