#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcpm/anchors.hpp"
#include "kcpm/intervals.hpp"
#include "kcpm/locked.hpp"
#include "kcpm/pillar.hpp"

namespace kcpm {

struct PsmParams {
  i64 period_divisor = 256;            // q <= m / (period_divisor * k)
  bool require_min_length = true;      // locked decompositions need |S| >= 225kq
  bool sample_when_available = false;  // run the non-overlap case whenever a sample exists
  i64 overlap_width = 0;               // t of the overlap/non-overlap split; 0 means qhat
};

// PeriodicSubMatch: positions p of U with p ∈ Occ_k(V[x..x+m), U) and
// p ≡_{77k} x + r (mod q), for 0 <= x <= |V| - m.
struct PsmInstance {
  Period Q;
  i64 m = 0, r = 0, k = 0, alpha = 0, beta = 0;
  Frag U, V;
  Frag P3;  // P^3; V = P3[alpha..beta] and rotations of P are taken from here

  i64 q() const { return Q.q(); }
  i64 lambda() const { return (112 * k + 3) * (3 * k + 10) * q() + 678 * k * q(); }
  i64 qhat() const { return 2 * (k + 6) * (q() + 3); }
  Frag pattern() const { return P3.sub(0, m); }
  Frag rotation(i64 y) const { return P3.sub(y, y + m); }
};

// Violated preconditions, empty when the instance is valid.
std::vector<std::string> validate(const StringStore& st, const PsmInstance& inst, const PsmParams& params = {});

struct PsmPrepared {
  PsmInstance inst;
  LockedDecomposition decU, decV;  // decV.sample is set when the non-overlap case runs
  bool corner = false;
  i64 t = 0;  // overlap width
};

// Validates and decomposes. ContractError on an invalid instance.
PsmPrepared prepare(const StringStore& st, const PsmInstance& inst, const PsmParams& params = {});

struct OffsetGeometry {
  i64 m = 0, nU = 0, nV = 0, k = 0, r = 0, q = 1;
};

struct OffsetSets {
  std::vector<Interval> lambda;  // (t+k)-overlap offsets
  std::vector<Interval> gamma;   // the valid ones
};

// t-overlap offsets in (-|V|..|U|): p - x with p ∈ Ext_t(lockU) ⊕ {-m,0,m} and
// x ∈ lockV ⊕ {-m,0,m}.
std::vector<Interval> overlap_set(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                                  const OffsetGeometry& g, i64 t);
OffsetSets overlap_offsets(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                           const OffsetGeometry& g, i64 t);
std::vector<Interval> nonov_intervals(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                                      const OffsetGeometry& g, i64 t);
OffsetGeometry geometry(const PsmInstance& inst);

struct CritBounds {
  i64 i1 = 0, i2 = 0, step = 0;
  Interval scope;
};

// Extremes of Occ_0(Q^{k+1}, U[scope(D)]), in U coordinates; nothing if empty.
std::optional<CritBounds> critical_bounds(const StringStore& st, const PsmPrepared& prep, const Interval& D);

struct PsmStats {
  i64 solved = 0;
  i64 corner = 0;
  i64 nonoverlap_runs = 0;
  i64 gamma_intervals = 0;
  i64 gamma_max_len = 0;
  i64 nonov_intervals = 0;
  i64 chains = 0;
  i64 per_offset_fallbacks = 0;
  i64 anchor_calls = 0;
};

struct PsmOutput {
  PositionSet set;              // report mode
  std::optional<i64> witness;   // decide mode
};

PsmOutput solve_overlap(const StringStore& st, const PsmPrepared& prep, i64 t, Mode mode,
                        PsmStats* stats = nullptr);
PsmOutput solve_nonoverlap(const StringStore& st, const PsmPrepared& prep, Mode mode,
                           PsmStats* stats = nullptr);
PsmOutput corner_small_m(const StringStore& st, const PsmPrepared& prep, Mode mode, PsmStats* stats = nullptr);
PsmOutput solve(const StringStore& st, const PsmPrepared& prep, Mode mode, PsmStats* stats = nullptr);

}  // namespace kcpm
