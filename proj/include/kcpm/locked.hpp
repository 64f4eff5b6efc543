#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kcpm/intervals.hpp"
#include "kcpm/pillar.hpp"

namespace kcpm {

// V[j1..j2] = Q^{k+1}, the middle of a locked-free run V[run_lo..run_hi] = Q^{3k+9}.
struct Sample {
  i64 j1 = 0, j2 = 0;
  i64 run_lo = 0, run_hi = 0;

  Interval range() const { return Interval{j1, j2}; }
};

// S = L_1 Q^{α_1} L_2 ... Q^{α_{ℓ-1}} L_ℓ. Intervals are local to S.
struct LockedDecomposition {
  Frag S;
  Period Q;  // gaps are literal powers of rot^shift(base)
  std::vector<Interval> locked;
  std::vector<i64> powers;
  std::vector<i64> costs;  // edl(L_i, Q)
  i64 total_cost = 0;      // edl(S, Q)
  std::optional<Sample> sample;

  // Locked fragments plus the sample, if one was chosen.
  std::vector<Interval> all_locked() const;
  // Gap between locked[i] and locked[i+1].
  Interval gap(size_t i) const { return Interval{locked[i].hi + 1, locked[i + 1].lo - 1}; }
};

struct LockedParams {
  bool require_min_length = true;  // |S| >= 225kq
};

// Requires edl(S,Q) <= 112k, Q primitive, and the length bound unless waived.
// Throws InvariantError if the result cannot be certified.
LockedDecomposition locked_decomposition(const StringStore& st, const Frag& S, const Period& Q, i64 k,
                                         const LockedParams& params = {});

// Independent check of every decomposition invariant; returns the violations.
std::vector<std::string> verify_locked(const StringStore& st, const LockedDecomposition& dec, i64 k);

// Leftmost locked-free, copy-aligned Q^{3k+9} inside V[|V|-m..m), or nothing.
std::optional<Sample> choose_sample(const LockedDecomposition& decV, i64 m, i64 k);

// Called on every decomposition produced, for invariant auditing.
using LockedObserver = std::function<void(const StringStore&, const LockedDecomposition&, i64 k)>;
void set_locked_observer(LockedObserver obs);

inline i64 locked_length_bound(i64 k, i64 q) { return 678 * k * q; }
inline i64 locked_count_bound(i64 k) { return 112 * k + 2; }

}  // namespace kcpm
