#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcpm/common.hpp"

namespace kcpm {

// Inclusive integer interval [lo..hi]; empty iff lo > hi (canonical empty is [0..-1]).
struct Interval {
  i64 lo = 0;
  i64 hi = -1;

  static Interval empty_set() { return Interval{0, -1}; }
  // [lo, hi) half-open to inclusive; the only place the two conventions meet.
  static Interval from_half_open(i64 lo, i64 hi) { return hi <= lo ? empty_set() : Interval{lo, hi - 1}; }

  bool empty() const { return lo > hi; }
  i64 size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(i64 x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval& o) const {
    return (empty() && o.empty()) || (lo == o.lo && hi == o.hi);
  }
};

Interval shift(const Interval& I, i64 b);                    // I ⊕ b
Interval minkowski_diff(const Interval& I, const Interval& J);  // I ⊖ J
Interval ext(const Interval& I, i64 t);                      // Ext_t(I)
Interval intersect(const Interval& a, const Interval& b);

// Sort and merge overlapping or adjacent intervals; drops empties.
std::vector<Interval> merge_union(std::vector<Interval> v);
// Maximal intervals of range not covered by v.
std::vector<Interval> complement_within(const std::vector<Interval>& v, const Interval& range);
// Maximal subintervals of I whose elements x satisfy x ≡_d target (mod q).
std::vector<Interval> approx_congruent_filter(const Interval& I, i64 target, i64 d, i64 q);

// I ∪ (I⊕q) ∪ ... ∪ (I⊕a·q).
struct Chain {
  Interval base;
  i64 count = 0;
  i64 diff = 0;

  bool empty() const { return base.empty(); }
  i64 lo() const { return base.lo; }
  i64 hi() const { return base.hi + count * diff; }
  bool member(i64 p) const;
  std::vector<i64> materialize() const;
  // Overlapping or touching copies collapse to one plain interval.
  Chain canonical() const;
  bool operator==(const Chain&) const = default;
};

Chain chain_make(const Interval& I, i64 a, i64 q);

// Union of chains. Duplicates are allowed; materialize() removes them.
class PositionSet {
 public:
  PositionSet() = default;

  void add(const Chain& c);
  void add(const Interval& I) { add(Chain{I, 0, 0}); }
  void add_point(i64 p) { add(Interval{p, p}); }
  void add_all(const PositionSet& o, i64 offset = 0);

  const std::vector<Chain>& chains() const { return chains_; }
  bool empty() const { return chains_.empty(); }
  size_t chain_count() const { return chains_.size(); }
  bool contains(i64 p) const;

  std::vector<i64> materialize() const;
  // Sorts by lo and merges plain intervals that overlap or touch.
  PositionSet normalized() const;
  // The same set rebuilt from its maximal runs, folding equally spaced runs of
  // equal length into chains.
  PositionSet compressed() const;
  // Restriction to [lo..hi]; each chain splits into at most three pieces.
  PositionSet clipped(const Interval& range) const;
  PositionSet shifted(i64 offset) const;

  std::string to_json(const std::string& mode, i64 k) const;
  static PositionSet from_json(const std::string& text);

 private:
  std::vector<Chain> chains_;
};

// Maximal runs of a sorted duplicate-free list.
std::vector<Interval> runs_of(const std::vector<i64>& sorted);
PositionSet from_positions(const std::vector<i64>& positions);

}  // namespace kcpm
