#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcpm/pillar.hpp"

namespace kcpm {

// Starts of k-edit occurrences of a pattern, plus the largest exclusive end
// among all of them (0 when there are none).
struct OccSet {
  std::vector<i64> positions;
  i64 max_end = 0;

  bool empty() const { return positions.empty(); }
  i64 size() const { return static_cast<i64>(positions.size()); }
};

// Occ_k(X, Y): p in [0..|Y|) with δ_E(X, Y[p..p']) <= k for some p' >= p.
OccSet occ_k(const StringStore& st, const Frag& X, const Frag& Y, i64 k);

enum class Branch { sparse, periodic, fallback };
const char* branch_name(Branch b);

struct PeriodicParams {
  // Dense iff floor(|occ|/k) > sparse_factor * (n/m) * k.
  i64 sparse_factor = 642045;
  // Candidate periods satisfy q <= m / (period_divisor * k).
  i64 period_divisor = 256;
};

struct PeriodicAnalysis {
  OccSet occ;
  Branch branch = Branch::sparse;
  // Set on the periodic branch: edl(P,Q) = edp(P,Q) = edp_pattern < 2k,
  // edp(tbar,Q) = edp_text <= 24k.
  std::optional<Period> Q;
  Frag tbar;
  i64 edp_pattern = 0;
  i64 edp_text = 0;
  std::string reason;  // why a dense window fell back
};

// Requires k >= 1 and 2|T| <= 3|P| + 2k.
PeriodicAnalysis analyze_periodic(const StringStore& st, const Frag& P, const Frag& T, i64 k,
                                  const PeriodicParams& params = {});

}  // namespace kcpm
