#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "kcpm/pillar.hpp"
#include "kcpm/wavefront.hpp"

namespace kcpm {

// Cost if within budget, else nullopt. The trace (when requested) uses
// 'M' match, 'S' substitution, 'D' letter of the first string only, 'I' letter of
// the second string only.
struct EditBudgeted {
  std::optional<i64> cost;
  std::string trace;

  bool within() const { return cost.has_value(); }
};

EditBudgeted edit_distance(const StringStore& st, const Frag& a, const Frag& b, i64 budget,
                           bool want_trace = false);

// Replays a trace; true iff it turns a into b with exactly `cost` edits.
bool trace_replays(const std::string& a, const std::string& b, const std::string& trace, i64 cost);

enum class PeriodMode { prefix, suffix, substring };

// Distance of s to a prefix (edp), suffix (eds) or substring (edl) of Q^∞.
// prefix: witness y = |Q'| with Q' = Q^∞[0..y).
// suffix: witness y = |Q'| with Q' the length-y suffix of Q^∞ ending at offset 0.
// substring: witness r = rotation with edl = edp(s, rot^r(Q)); qlen is its y.
struct PeriodCost {
  std::optional<i64> cost;
  i64 witness = 0;
  i64 qlen = 0;
  std::string trace;

  bool within() const { return cost.has_value(); }
};

PeriodCost ed_vs_period(const StringStore& st, const Frag& s, const Period& Q, PeriodMode mode,
                        i64 budget, bool want_trace = false);

inline PeriodCost edp(const StringStore& st, const Frag& s, const Period& Q, i64 budget,
                      bool want_trace = false) {
  return ed_vs_period(st, s, Q, PeriodMode::prefix, budget, want_trace);
}
inline PeriodCost eds(const StringStore& st, const Frag& s, const Period& Q, i64 budget) {
  return ed_vs_period(st, s, Q, PeriodMode::suffix, budget);
}
inline PeriodCost edl(const StringStore& st, const Frag& s, const Period& Q, i64 budget,
                      bool want_trace = false) {
  return ed_vs_period(st, s, Q, PeriodMode::substring, budget, want_trace);
}

// Incremental wavefront of S against Q^∞. The t-th call to next() (t = 0, 1, ...)
// returns (|S'|, |Q'|): S' is the longest prefix (forward) or suffix (backward) of
// S with δ_E(S', Q') <= t for a prefix Q' of Q^∞ (forward) or suffix of Q^∞ ending
// at offset 0 (backward). Ties in |Q'| go to the shortest.
class EditGenerator {
 public:
  EditGenerator(const StringStore& st, const Frag& S, const Period& Q, Dir dir);

  std::pair<i64, i64> next();
  i64 calls() const { return wf_.level() + 1; }

 private:
  using Ext = std::function<i64(i64, i64)>;
  Wavefront<Ext> wf_;
};

}  // namespace kcpm
