#include "kcpm/editkern.hpp"

namespace kcpm {

namespace {

constexpr i64 kUnbounded = i64{1} << 40;

}  // namespace

EditBudgeted edit_distance(const StringStore& st, const Frag& a, const Frag& b, i64 budget,
                           bool want_trace) {
  require(budget >= 0, "budget must be nonnegative");
  EditBudgeted out;
  const i64 d = b.size() - a.size();
  if (d > budget || -d > budget) return out;
  auto wf = make_wavefront(
      a.size(), b.size(),
      [&](i64 x, i64 y) { return st.lce(a.suffix_from(x), b.suffix_from(y)); });
  for (i64 e = 0; e <= budget; ++e) {
    wf.advance();
    if (wf.reach(e, d) == a.size()) {
      out.cost = e;
      if (want_trace) out.trace = wf.trace(e, d);
      return out;
    }
  }
  return out;
}

bool trace_replays(const std::string& a, const std::string& b, const std::string& trace, i64 cost) {
  size_t i = 0, j = 0;
  i64 edits = 0;
  for (char op : trace) {
    switch (op) {
      case 'M':
        if (i >= a.size() || j >= b.size() || a[i] != b[j]) return false;
        ++i, ++j;
        break;
      case 'S':
        if (i >= a.size() || j >= b.size()) return false;
        ++i, ++j, ++edits;
        break;
      case 'D':
        if (i >= a.size()) return false;
        ++i, ++edits;
        break;
      case 'I':
        if (j >= b.size()) return false;
        ++j, ++edits;
        break;
      default:
        return false;
    }
  }
  return i == a.size() && j == b.size() && edits == cost;
}

namespace {

PeriodCost ed_prefix_or_suffix(const StringStore& st, const Frag& s, const Period& Q, bool suffix,
                               i64 budget, bool want_trace) {
  PeriodCost out;
  const i64 n = s.size();
  auto run = [&](auto ext) {
    auto wf = make_wavefront(n, n + budget + 1, ext);
    for (i64 e = 0; e <= budget; ++e) {
      wf.advance();
      for (i64 d = -e; d <= e; ++d) {
        if (wf.reach(e, d) == n) {
          out.cost = e;
          out.witness = out.qlen = n + d;
          if (want_trace) out.trace = wf.trace(e, d);
          return;
        }
      }
    }
  };
  if (!suffix)
    run([&](i64 x, i64 y) { return lce_period(st, s.suffix_from(x), Q, y); });
  else
    run([&](i64 x, i64 y) { return lce_period_back(st, s.prefix(n - x), Q, -y); });
  return out;
}

}  // namespace

PeriodCost ed_vs_period(const StringStore& st, const Frag& s, const Period& Q, PeriodMode mode,
                        i64 budget, bool want_trace) {
  require(Q.q() > 0, "period must be nonempty");
  require(budget >= 0, "budget must be nonnegative");
  if (mode == PeriodMode::prefix) return ed_prefix_or_suffix(st, s, Q, false, budget, want_trace);
  if (mode == PeriodMode::suffix) return ed_prefix_or_suffix(st, s, Q, true, budget, want_trace);
  PeriodCost best;
  i64 cap = budget;
  for (i64 r = 0; r < Q.q(); ++r) {
    PeriodCost c = ed_prefix_or_suffix(st, s, Q.rotated(r), false, cap, want_trace);
    if (!c.within()) continue;
    if (!best.within() || *c.cost < *best.cost) {
      best = c;
      best.witness = r;
      if (*c.cost == 0) break;
      cap = *c.cost - 1;
    }
  }
  return best;
}

EditGenerator::EditGenerator(const StringStore& st, const Frag& S, const Period& Q, Dir dir)
    : wf_(S.size(), kUnbounded,
          dir == Dir::forward
              ? Ext([&st, S, Q](i64 x, i64 y) { return lce_period(st, S.suffix_from(x), Q, y); })
              : Ext([&st, S, Q](i64 x, i64 y) {
                  return lce_period_back(st, S.prefix(S.size() - x), Q, -y);
                })) {}

std::pair<i64, i64> EditGenerator::next() {
  wf_.advance();
  const i64 t = wf_.level();
  i64 best = -1, qlen = 0;
  for (i64 d = -t; d <= t; ++d) {
    i64 a = wf_.reach(t, d);
    if (a != Wavefront<Ext>::kNone && a > best) {
      best = a;
      qlen = a + d;
    }
  }
  return {best, qlen};
}

}  // namespace kcpm
