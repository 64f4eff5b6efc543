#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kcpm/common.hpp"

namespace kcpm {

// A positioned substring [lo, hi) of a registered string.
struct Frag {
  int sid = -1;
  i64 lo = 0;
  i64 hi = 0;

  i64 size() const { return hi - lo; }
  bool empty() const { return hi <= lo; }
  // Sub-fragment [a, b) in local coordinates.
  Frag sub(i64 a, i64 b) const {
    require(0 <= a && a <= b && b <= size(), "Frag::sub out of range");
    return Frag{sid, lo + a, lo + b};
  }
  Frag prefix(i64 len) const { return sub(0, len); }
  Frag suffix_from(i64 a) const { return sub(a, size()); }
  bool operator==(const Frag&) const = default;
};

// {first + j*step : 0 <= j < count}
struct ArithProg {
  i64 first = 0;
  i64 step = 0;
  i64 count = 0;

  bool empty() const { return count == 0; }
  i64 last() const { return first + (count - 1) * step; }
  std::vector<i64> enumerate() const;
  bool operator==(const ArithProg&) const = default;
};

enum class Dir { forward, backward };

// Registered byte strings with longest-common-extension queries.
//
// All strings and their reversals are concatenated with unique separators; a
// suffix array with LCP and a sparse-table RMQ answers LCE in O(1). The index
// is rebuilt on every registration, so register inputs up front.
class StringStore {
 public:
  StringStore() = default;

  int add(std::string_view s);
  std::vector<int> add_many(const std::vector<std::string_view>& ss);

  Frag whole(int sid) const;
  i64 length(int sid) const { return static_cast<i64>(strs_.at(sid).size()); }
  const std::string& raw(int sid) const { return strs_.at(sid); }
  int count() const { return static_cast<int>(strs_.size()); }

  unsigned char access(const Frag& f, i64 i) const {
    require(0 <= i && i < f.size(), "access out of range");
    return static_cast<unsigned char>(strs_[f.sid][f.lo + i]);
  }
  std::string extract(const Frag& f) const;
  i64 length(const Frag& f) const { return f.size(); }

  // Longest common prefix (forward) or suffix (backward) of a and b.
  i64 lce(const Frag& a, const Frag& b, Dir dir = Dir::forward) const;
  i64 lce_back(const Frag& a, const Frag& b) const { return lce(a, b, Dir::backward); }

  // Exact occurrences of s in t; requires |t| <= 2|s|.
  ArithProg ipm(const Frag& s, const Frag& t) const;

  bool valid(const Frag& f) const {
    return f.sid >= 0 && f.sid < count() && 0 <= f.lo && f.lo <= f.hi && f.hi <= length(f.sid);
  }

 private:
  void rebuild();
  i64 lce_raw(i64 p, i64 q) const;

  std::vector<std::string> strs_;
  std::vector<i64> fwd_off_, rev_off_;
  std::vector<int> sa_, rank_, lcp_;
  std::vector<std::vector<int>> sparse_;
  std::vector<int> log2_;
  i64 total_ = 0;
};

// Q = rot^shift(base), used to view Q^∞ without materializing it.
struct Period {
  Frag base;
  i64 shift = 0;

  i64 q() const { return base.size(); }
  Period rotated(i64 s) const { return Period{base, mod(shift + s, base.size())}; }
};

// Letter Q^∞[j] for any integer j (negative j extends Q^∞ to the left).
unsigned char period_at(const StringStore& st, const Period& Q, i64 j);

// lce(s, Q^∞[off..)).
i64 lce_period(const StringStore& st, const Frag& s, const Period& Q, i64 off);
// Longest common suffix of s and the left-infinite string ...Q^∞[off-2]Q^∞[off-1].
i64 lce_period_back(const StringStore& st, const Frag& s, const Period& Q, i64 off);

// Q occurs in QQ only at 0 and |Q| (checked piecewise with lce).
bool is_primitive(const StringStore& st, const Frag& Q);

}  // namespace kcpm
