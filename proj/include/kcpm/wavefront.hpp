#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "kcpm/common.hpp"

namespace kcpm {

// Landau–Vishkin wavefront over strings A (length la) and B (length lb).
//
// Cell (a, b) holds δ_E(A[0..a), B[0..b)); diagonal d = b - a. After level e is
// computed, reach(e, d) is the largest a with cell (a, a+d) of cost <= e, or
// kNone. Costs are non-decreasing along a diagonal, so the cells of cost <= e on
// diagonal d are exactly a in [max(0,-d) .. reach(e, d)].
//
// ext(a, b) must return the LCE of A[a..) and B[b..) (it is clipped here).
template <class Ext>
class Wavefront {
 public:
  static constexpr i64 kNone = std::numeric_limits<i64>::min() / 4;

  Wavefront(i64 la, i64 lb, Ext ext) : la_(la), lb_(lb), ext_(std::move(ext)) {}

  i64 level() const { return static_cast<i64>(reach_.size()) - 1; }
  i64 la() const { return la_; }
  i64 lb() const { return lb_; }

  i64 reach(i64 e, i64 d) const {
    if (e < 0 || e > level() || d < -e || d > e) return kNone;
    return reach_[e][d + e];
  }

  void advance() {
    const i64 e = level() + 1;
    std::vector<i64> cur(2 * e + 1, kNone);
    for (i64 d = -e; d <= e; ++d) {
      i64 best = kNone;
      if (e == 0) {
        if (d == 0) best = 0;
      } else {
        i64 r0 = reach(e - 1, d);
        i64 r1 = reach(e - 1, d + 1);  // drop a letter of A
        i64 r2 = reach(e - 1, d - 1);  // drop a letter of B
        if (r0 != kNone) best = std::max(best, r0 + 1);
        if (r1 != kNone) best = std::max(best, r1 + 1);
        if (r2 != kNone) best = std::max(best, r2);
      }
      if (best == kNone) continue;
      // Every cell before a reach is also within budget, so clipping is exact.
      best = std::min({best, la_, lb_ - d});
      if (best < std::max<i64>(0, -d)) continue;
      i64 room = std::min(la_ - best, lb_ - best - d);
      if (room > 0) best += std::min(room, ext_(best, best + d));
      cur[d + e] = best;
    }
    reach_.push_back(std::move(cur));
  }

  // An optimal alignment of A[0..a) with B[0..a+d) for some a <= reach(e, d), as
  // 'M','S','D' (A only), 'I' (B only), in left-to-right order. Uses ext to
  // recognise matching letters.
  std::string trace(i64 e, i64 d, i64 a) const {
    require(a != kNone && a <= reach(e, d) && a >= std::max<i64>(0, -d), "trace of unreachable cell");
    std::string ops;
    auto cell_ok = [&](i64 lev, i64 dd, i64 aa) {
      return aa >= std::max<i64>(0, -dd) && aa <= reach(lev, dd) && reach(lev, dd) != kNone;
    };
    while (a > 0 || a + d > 0) {
      if (e > 0 && cell_ok(e - 1, d, a)) {
        --e;
        continue;
      }
      if (a > 0 && a + d > 0 && ext_(a - 1, a - 1 + d) >= 1) {
        ops.push_back('M');
        --a;
        continue;
      }
      require(e > 0, "trace lost its way");
      if (a > 0 && a + d > 0 && cell_ok(e - 1, d, a - 1)) {
        ops.push_back('S');
        --a;
      } else if (a > 0 && cell_ok(e - 1, d + 1, a - 1)) {
        ops.push_back('D');
        --a;
        ++d;
      } else {
        require(a + d > 0 && cell_ok(e - 1, d - 1, a), "trace lost its way");
        ops.push_back('I');
        --d;
      }
      --e;
    }
    std::reverse(ops.begin(), ops.end());
    return ops;
  }
  std::string trace(i64 e, i64 d) const { return trace(e, d, reach(e, d)); }

 private:
  i64 la_, lb_;
  Ext ext_;
  std::vector<std::vector<i64>> reach_;
};

template <class Ext>
Wavefront<Ext> make_wavefront(i64 la, i64 lb, Ext ext) {
  return Wavefront<Ext>(la, lb, std::move(ext));
}

}  // namespace kcpm
