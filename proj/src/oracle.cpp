#include "kcpm/oracle.hpp"

#include <algorithm>
#include <set>

namespace kcpm::oracle {

namespace {

using Matrix = std::vector<std::vector<i64>>;

// D[i][j] = δ_E(a[0..i), b[0..j)), with D[0][j] = free_start ? 0 : j.
Matrix dp_table(const std::string& a, const std::string& b, bool free_start) {
  const size_t n = a.size(), m = b.size();
  Matrix D(n + 1, std::vector<i64>(m + 1, 0));
  for (size_t j = 0; j <= m; ++j) D[0][j] = free_start ? 0 : static_cast<i64>(j);
  for (size_t i = 1; i <= n; ++i) {
    D[i][0] = static_cast<i64>(i);
    for (size_t j = 1; j <= m; ++j) {
      i64 sub = D[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      D[i][j] = std::min({sub, D[i - 1][j] + 1, D[i][j - 1] + 1});
    }
  }
  return D;
}

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

i64 edit_dp(const std::string& a, const std::string& b) { return dp_table(a, b, false).back().back(); }

std::string rotate(const std::string& s, i64 x) {
  if (s.empty()) return s;
  i64 n = static_cast<i64>(s.size());
  x = ((x % n) + n) % n;
  return s.substr(static_cast<size_t>(x)) + s.substr(0, static_cast<size_t>(x));
}

std::vector<i64> occ(const std::string& X, const std::string& Y, i64 k) {
  // Free start over reversed Y gives free end over Y; a cost at column j is the
  // best alignment of X ending at reversed position j, i.e. starting at |Y| - j.
  const i64 n = static_cast<i64>(Y.size());
  Matrix D = dp_table(reversed(X), reversed(Y), true);
  std::vector<i64> out;
  for (i64 p = 0; p < n; ++p) {
    if (D.back()[static_cast<size_t>(n - p)] <= k) out.push_back(p);
  }
  return out;
}

OracleReport brute_circocc(const std::string& P, const std::string& T, i64 k, bool want_witnesses) {
  const i64 m = static_cast<i64>(P.size());
  const i64 n = static_cast<i64>(T.size());
  std::set<i64> all;
  OracleReport rep;
  for (i64 x = 0; x < m; ++x) {
    std::string R = rotate(P, x);
    for (i64 p : occ(R, T, k)) {
      if (!all.insert(p).second || !want_witnesses) continue;
      Matrix F = dp_table(R, T.substr(static_cast<size_t>(p)), false);
      Witness w{p, x, F.back()[1]};
      for (i64 len = 1; len <= n - p; ++len) {
        if (F.back()[static_cast<size_t>(len)] < w.cost) w = Witness{p + len - 1, x, F.back()[static_cast<size_t>(len)]};
      }
      rep.witnesses[p] = w;
    }
  }
  rep.positions.assign(all.begin(), all.end());
  return rep;
}

namespace {

// left[x][p] = δ_E(T[p..i), P[x..m)) for p in [0..i];
// right[x][len] = δ_E(T[i..i+len), P[0..x)).
struct AnchorTables {
  std::vector<std::vector<i64>> left, right;
};

AnchorTables anchor_tables(const std::string& P, const std::string& T, i64 i) {
  const i64 m = static_cast<i64>(P.size());
  AnchorTables t;
  std::string before = reversed(T.substr(0, static_cast<size_t>(i)));
  std::string after = T.substr(static_cast<size_t>(i));
  for (i64 x = 0; x <= m; ++x) {
    Matrix L = dp_table(reversed(P.substr(static_cast<size_t>(x))), before, false);
    std::vector<i64> row(static_cast<size_t>(i + 1));
    for (i64 p = 0; p <= i; ++p) row[static_cast<size_t>(p)] = L.back()[static_cast<size_t>(i - p)];
    t.left.push_back(row);
    Matrix R = dp_table(P.substr(0, static_cast<size_t>(x)), after, false);
    t.right.push_back(R.back());
  }
  return t;
}

}  // namespace

std::vector<i64> brute_anchored(const std::string& P, const std::string& T, i64 i, i64 k) {
  const i64 m = static_cast<i64>(P.size());
  AnchorTables t = anchor_tables(P, T, i);
  std::vector<i64> out;
  for (i64 p = 0; p <= i; ++p) {
    bool ok = false;
    for (i64 x = 0; x <= m && !ok; ++x) {
      const auto& R = t.right[static_cast<size_t>(x)];
      // T[p..p'] must be nonempty: when p == i the right part needs a letter.
      size_t from = p == i ? 1 : 0;
      for (size_t len = from; len < R.size() && !ok; ++len)
        ok = t.left[static_cast<size_t>(x)][static_cast<size_t>(p)] + R[len] <= k;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<std::tuple<i64, i64, i64>> brute_x_anchored(const std::string& P, const std::string& T,
                                                        i64 i, i64 k) {
  const i64 m = static_cast<i64>(P.size());
  AnchorTables t = anchor_tables(P, T, i);
  std::vector<std::tuple<i64, i64, i64>> out;
  for (i64 x = 0; x <= m; ++x) {
    const auto& R = t.right[static_cast<size_t>(x)];
    for (i64 p = 0; p <= i; ++p) {
      for (size_t len = 0; len < R.size(); ++len) {
        i64 e = i + static_cast<i64>(len);
        if (e == p) continue;
        if (t.left[static_cast<size_t>(x)][static_cast<size_t>(p)] + R[len] <= k) out.emplace_back(p, e, x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> brute_psm(const std::string& U, const std::string& V, i64 m, i64 r, i64 k, i64 q) {
  std::set<i64> all;
  const i64 nv = static_cast<i64>(V.size());
  for (i64 x = 0; x + m <= nv; ++x) {
    for (i64 p : occ(V.substr(static_cast<size_t>(x), static_cast<size_t>(m)), U, k)) {
      if (approx_congruent(p, x + r, 77 * k, q)) all.insert(p);
    }
  }
  return {all.begin(), all.end()};
}

PeriodDist brute_edp(const std::string& s, const std::string& Q) {
  const i64 len = 2 * static_cast<i64>(s.size()) + 1;
  std::string inf = power_prefix(Q, len);
  Matrix D = dp_table(s, inf, false);
  PeriodDist best{D.back()[0], 0};
  for (i64 y = 1; y <= len; ++y) {
    if (D.back()[static_cast<size_t>(y)] < best.cost) best = PeriodDist{D.back()[static_cast<size_t>(y)], y};
  }
  return best;
}

PeriodDist brute_eds(const std::string& s, const std::string& Q) {
  return brute_edp(reversed(s), reversed(Q));
}

PeriodDist brute_edl(const std::string& s, const std::string& Q) {
  PeriodDist best{0, -1};
  for (i64 r = 0; r < static_cast<i64>(Q.size()); ++r) {
    PeriodDist c = brute_edp(s, rotate(Q, r));
    if (best.witness < 0 || c.cost < best.cost) best = PeriodDist{c.cost, r};
  }
  return best;
}

std::pair<i64, i64> brute_gen(const std::string& S, const std::string& Q, i64 t, bool backward) {
  std::string s = backward ? reversed(S) : S;
  std::string qq = backward ? reversed(Q) : Q;
  const i64 len = 2 * static_cast<i64>(s.size()) + t + 1;
  Matrix D = dp_table(s, power_prefix(qq, len), false);
  for (i64 a = static_cast<i64>(s.size()); a >= 0; --a) {
    for (i64 y = 0; y <= len; ++y) {
      if (D[static_cast<size_t>(a)][static_cast<size_t>(y)] <= t) return {a, y};
    }
  }
  return {0, 0};
}

std::string random_string(std::mt19937_64& rng, i64 len, int sigma) {
  std::uniform_int_distribution<int> letter(0, sigma - 1);
  std::string s;
  for (i64 i = 0; i < len; ++i) s.push_back(static_cast<char>('a' + letter(rng)));
  return s;
}

std::string plant_edits(std::mt19937_64& rng, std::string s, i64 edits, int sigma) {
  std::uniform_int_distribution<int> letter(0, sigma - 1);
  for (i64 e = 0; e < edits; ++e) {
    int kind = static_cast<int>(rng() % 3);
    if (s.empty()) kind = 1;
    if (kind == 1) {
      size_t at = rng() % (s.size() + 1);
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), static_cast<char>('a' + letter(rng)));
    } else {
      size_t at = rng() % s.size();
      if (kind == 0) s[at] = static_cast<char>('a' + letter(rng));
      else s.erase(s.begin() + static_cast<std::ptrdiff_t>(at));
    }
  }
  return s;
}

std::string random_primitive(std::mt19937_64& rng, i64 q, int sigma) {
  require(q >= 1 && (q == 1 || sigma >= 2), "no primitive string of that shape");
  while (true) {
    std::string Q = random_string(rng, q, sigma);
    if ((Q + Q).find(Q, 1) == static_cast<size_t>(q)) return Q;
  }
}

std::string power_prefix(const std::string& Q, i64 len, i64 phase) {
  std::string s;
  const i64 q = static_cast<i64>(Q.size());
  for (i64 j = 0; j < len; ++j) s.push_back(Q[static_cast<size_t>(mod(phase + j, q))]);
  return s;
}

}  // namespace kcpm::oracle
