#pragma once

// Brute-force references. Everything here is full-matrix dynamic programming on
// plain std::string values and deliberately shares no code with the fast paths.

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "kcpm/common.hpp"

namespace kcpm::oracle {

i64 edit_dp(const std::string& a, const std::string& b);

std::string rotate(const std::string& s, i64 x);

// Occ_k(X, Y): starts p in [0..|Y|) with δ_E(X, Y[p..p']) <= k for some p' >= p.
std::vector<i64> occ(const std::string& X, const std::string& Y, i64 k);

struct Witness {
  i64 end = 0;  // p' (inclusive)
  i64 rot = 0;
  i64 cost = 0;
};

struct OracleReport {
  std::vector<i64> positions;
  std::map<i64, Witness> witnesses;
};

OracleReport brute_circocc(const std::string& P, const std::string& T, i64 k,
                           bool want_witnesses = false);

std::vector<i64> brute_anchored(const std::string& P, const std::string& T, i64 i, i64 k);

// All (p, e, x) with T[p..e) nonempty and x-anchored at i, for x in [0..m].
std::vector<std::tuple<i64, i64, i64>> brute_x_anchored(const std::string& P, const std::string& T,
                                                        i64 i, i64 k);

// {p in Occ_k(V[x..x+m), U) : p ≡_{77k} x + r (mod q), 0 <= x <= |V| - m}.
std::vector<i64> brute_psm(const std::string& U, const std::string& V, i64 m, i64 r, i64 k, i64 q);

struct PeriodDist {
  i64 cost = 0;
  i64 witness = 0;
};

// Distance to the closest prefix / suffix / substring of Q^∞ (witness as in editkern).
PeriodDist brute_edp(const std::string& s, const std::string& Q);
PeriodDist brute_eds(const std::string& s, const std::string& Q);
PeriodDist brute_edl(const std::string& s, const std::string& Q);

// t-th generator answer: (|S'|, |Q'|) for the longest prefix (or suffix) S' within t.
std::pair<i64, i64> brute_gen(const std::string& S, const std::string& Q, i64 t, bool backward);

// Random inputs shared by the test suites and the bench command.
std::string random_string(std::mt19937_64& rng, i64 len, int sigma);
// Applies `edits` random substitutions, insertions or deletions.
std::string plant_edits(std::mt19937_64& rng, std::string s, i64 edits, int sigma);
std::string random_primitive(std::mt19937_64& rng, i64 q, int sigma);
std::string power_prefix(const std::string& Q, i64 len, i64 phase = 0);

}  // namespace kcpm::oracle
