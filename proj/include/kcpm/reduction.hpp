#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcpm/intervals.hpp"
#include "kcpm/keditpm.hpp"
#include "kcpm/pillar.hpp"
#include "kcpm/psm.hpp"

namespace kcpm {

// Fragments of T of length `len` starting at multiples of `stride`, the last
// one reaching the end of T (and possibly shorter).
std::vector<Frag> cover(const Frag& T, i64 len, i64 stride);
// Outer windows: length floor(3m/2)+k, stride floor(m/2).
std::vector<Frag> split_windows(const Frag& T, i64 m, i64 k);

// Which half of the pattern the pass anchors on: P1 inside P2P1P2, or P2 inside P1P2P1.
enum class Half { first, second };

// One pass of the reduction. Pv is the rotation of P whose prefix of length h
// is the anchored half, S = P2P1P2 in the pass's own terms (P1 = Pv[0..h)).
// All three are fragments of P^3; S starts at P^3 offset `base`.
struct PassView {
  Half half = Half::first;
  i64 m = 0, h = 0, base = 0;
  Frag Pv, P1, S;
};
PassView pass_view(const Frag& P3, i64 m, Half half);

struct VResult {
  Frag V;  // fragment of P^3 starting at some offset alpha < m
  i64 alpha = 0, beta = 0;
  std::optional<Frag> R_left, R_right;  // fragments of S
  i64 z_len = 0, w_len = 0;             // |Z| (ends with P1), |W| (starts with P1)
  i64 y_len = 0;                        // |Y'|: eds witness of V[0..|Z|-h)
};

// Q must be aligned with the start of P1 (edp(P1, Q) < 2k).
VResult compute_v(const StringStore& st, const Frag& P3, const PassView& pv, const Period& Q, i64 k);

struct UResult {
  Frag U;
  i64 x_len = 0;        // |X|: letters prepended to tbar
  i64 g_len = 0;        // letters appended
  i64 x_prime_len = 0;  // |X'|
  bool x_within = false;
};

// Extends tbar inside Twin. Q is aligned with the start of tbar.
UResult compute_u(const StringStore& st, const Frag& Twin, const Frag& tbar, const Period& Q, i64 k,
                  i64 p2len);

i64 derive_r(i64 x_prime_len, i64 y_prime_len, i64 q);

struct ReductionParams {
  PeriodicParams periodic;
  PsmParams psm;
  bool use_psm = true;  // off: every dense window is anchored directly
};

struct ReductionStats {
  i64 windows = 0;
  i64 inner = 0;
  i64 sparse = 0, periodic = 0, fallback = 0;
  i64 psm_instances = 0;
  i64 psm_duplicates = 0;
  i64 psm_rejected = 0;  // invalid instance, |U| < m, or uncertified decomposition
  i64 dense_fallbacks = 0;
  i64 region_occurrences = 0;
  i64 anchor_calls = 0;
  i64 max_window_anchors = 0;
  i64 chains_out = 0;
  PsmStats psm;
  std::vector<std::string> reasons;
};

struct PsmJob {
  PsmInstance inst;
  i64 u_offset = 0;  // U[0] in the window's coordinates
};

struct ReductionResult {
  PositionSet direct;  // window coordinates
  std::vector<PsmJob> instances;
  std::optional<i64> witness;  // decide mode: a direct hit
};

ReductionResult reduce_window(const StringStore& st, const Frag& P3, const Frag& W, i64 k, Mode mode,
                              const ReductionParams& params = {}, ReductionStats* stats = nullptr);

// P^3 and T registered in one store.
struct Problem {
  StringStore st;
  Frag P3, T;
  i64 m = 0;
  Frag pattern() const { return P3.sub(0, m); }
};
std::unique_ptr<Problem> make_problem(std::string_view P, std::string_view T);

struct CircOccResult {
  PositionSet set;             // report mode
  std::optional<i64> witness;  // decide mode
  ReductionStats stats;
};

// CircOcc_k(P, T), or one member of it.
CircOccResult circ_occ(const Problem& pr, i64 k, Mode mode, const ReductionParams& params = {});

}  // namespace kcpm
