#include "kcpm/locked.hpp"

#include <utility>

#include "kcpm/editkern.hpp"

namespace kcpm {

namespace {

LockedObserver& observer() {
  static LockedObserver obs;
  return obs;
}

// A run of consecutive exact copies of Q in S: S[start .. start + copies*q).
struct Run {
  i64 start = 0;
  i64 copies = 0;
};

// Exact copies of Q that the optimal alignment matches letter by letter.
std::vector<Run> clean_runs(const std::string& trace, i64 r, i64 q, i64 qlen) {
  // For every target letter g of rot^r(Q)^∞[0..qlen): its S position if matched, else -1.
  std::vector<i64> at(qlen, -1);
  i64 s = 0, g = 0;
  for (char op : trace) {
    if (op == 'M') at[g] = s;
    if (op != 'I') ++s;
    if (op != 'D') ++g;
  }
  std::vector<Run> runs;
  i64 last_copy = -2;
  // Copy c of Q^∞ occupies target letters [c*q - r, (c+1)*q - r).
  for (i64 c = (r + q - 1) / q; (c + 1) * q - r <= qlen; ++c) {
    const i64 g0 = c * q - r;
    bool clean = at[g0] >= 0;
    for (i64 j = 1; clean && j < q; ++j) clean = at[g0 + j] == at[g0] + j;
    if (!clean) continue;
    const i64 s0 = at[g0];
    if (!runs.empty() && last_copy == c - 1 && runs.back().start + runs.back().copies * q == s0)
      ++runs.back().copies;
    else
      runs.push_back(Run{s0, 1});
    last_copy = c;
  }
  return runs;
}

std::vector<Interval> complement_of(const std::vector<Run>& runs, i64 n, i64 q) {
  std::vector<Interval> out;
  i64 cur = 0;
  for (const auto& run : runs) {
    out.push_back(Interval{cur, run.start - 1});
    cur = run.start + run.copies * q;
  }
  out.push_back(Interval{cur, n - 1});
  return out;
}

}  // namespace

std::vector<Interval> LockedDecomposition::all_locked() const {
  std::vector<Interval> out = locked;
  if (sample) out.push_back(sample->range());
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

void set_locked_observer(LockedObserver obs) { observer() = std::move(obs); }

LockedDecomposition locked_decomposition(const StringStore& st, const Frag& S, const Period& Q, i64 k,
                                         const LockedParams& params) {
  const i64 q = Q.q(), n = S.size();
  require(k >= 1, "locked fragments need k >= 1");
  require(is_primitive(st, Q.base), "period must be primitive");
  require(!params.require_min_length || n >= 225 * k * q, "string shorter than 225kq");
  PeriodCost whole = edl(st, S, Q, 112 * k, true);
  require(whole.within(), "string is not almost periodic (edl > 112k)");

  auto runs = clean_runs(whole.trace, whole.witness, q, whole.qlen);
  // Boundary rule: a locked end shorter than q absorbs the neighbouring copy.
  if (!runs.empty() && runs.front().start < q) {
    runs.front().start += q;
    if (--runs.front().copies == 0) runs.erase(runs.begin());
  }
  if (!runs.empty() && n - (runs.back().start + runs.back().copies * q) < q) {
    if (--runs.back().copies == 0) runs.pop_back();
  }

  LockedDecomposition dec;
  dec.S = S;
  dec.Q = Q;
  dec.total_cost = *whole.cost;
  while (true) {
    dec.locked = complement_of(runs, n, q);
    dec.costs.clear();
    i64 sum = 0;
    for (const auto& L : dec.locked) {
      PeriodCost c = edl(st, S.sub(L.lo, L.hi + 1), Q, dec.total_cost);
      ensure(c.within(), "locked fragment costlier than the whole string");
      dec.costs.push_back(*c.cost);
      sum += *c.cost;
    }
    size_t zero = 0;
    for (size_t i = 1; i + 1 < dec.costs.size() && !zero; ++i)
      if (dec.costs[i] == 0) zero = i;
    if (sum == dec.total_cost && !zero) break;
    // Merge across one gap; every merge drops a fragment, and a single
    // fragment is S itself, whose cost is the total.
    size_t g = zero ? zero : 0;
    if (!zero)
      for (size_t i = 1; i < runs.size(); ++i)
        if (runs[i].copies < runs[g].copies) g = i;
    runs.erase(runs.begin() + g);
  }
  dec.powers.clear();
  for (const auto& run : runs) dec.powers.push_back(run.copies);

  i64 total_len = 0;
  for (const auto& L : dec.locked) total_len += L.size();
  ensure(static_cast<i64>(dec.locked.size()) <= locked_count_bound(k),
         "too many locked fragments: " + std::to_string(dec.locked.size()));
  ensure(total_len <= locked_length_bound(k, q),
         "locked fragments too long: " + std::to_string(total_len));
  ensure(dec.locked.front().size() >= q && dec.locked.back().size() >= q,
         "boundary locked fragment shorter than q");
  if (observer()) observer()(st, dec, k);
  return dec;
}

std::vector<std::string> verify_locked(const StringStore& st, const LockedDecomposition& dec, i64 k) {
  std::vector<std::string> bad;
  const i64 q = dec.Q.q(), n = dec.S.size();
  const auto& L = dec.locked;
  if (L.empty()) return {"no locked fragments"};
  if (L.front().lo != 0 || L.back().hi != n - 1) bad.push_back("fragments do not span S");
  if (dec.powers.size() + 1 != L.size()) bad.push_back("power count mismatch");
  std::string rebuilt;
  std::string Qs;
  for (i64 j = 0; j < q; ++j) Qs.push_back(static_cast<char>(period_at(st, dec.Q, j)));
  for (size_t i = 0; i < L.size(); ++i) {
    if (L[i].empty()) bad.push_back("empty locked fragment");
    rebuilt += st.extract(dec.S.sub(L[i].lo, L[i].hi + 1));
    if (i + 1 == L.size()) break;
    Interval G = dec.gap(i);
    if (G.empty() || G.size() % q != 0) {
      bad.push_back("gap is not a positive power");
      continue;
    }
    if (i < dec.powers.size() && dec.powers[i] != G.size() / q) bad.push_back("wrong exponent");
    for (i64 c = 0; c < G.size() / q; ++c) rebuilt += Qs;
  }
  if (rebuilt != st.extract(dec.S)) bad.push_back("reassembly differs from S");

  PeriodCost whole = edl(st, dec.S, dec.Q, n + q);
  i64 sum = 0;
  for (size_t i = 0; i < L.size(); ++i) {
    if (L[i].empty()) continue;
    PeriodCost c = edl(st, dec.S.sub(L[i].lo, L[i].hi + 1), dec.Q, L[i].size() + q);
    sum += *c.cost;
    if (i < dec.costs.size() && dec.costs[i] != *c.cost) bad.push_back("recorded cost differs");
    if (i > 0 && i + 1 < L.size() && *c.cost == 0) bad.push_back("internal fragment without edits");
  }
  if (sum != *whole.cost) bad.push_back("costs do not add up to edl(S,Q)");
  i64 total_len = 0;
  for (const auto& f : L) total_len += f.size();
  if (total_len > locked_length_bound(k, q)) bad.push_back("total locked length above 678kq");
  if (static_cast<i64>(L.size()) > locked_count_bound(k)) bad.push_back("more than 112k+2 fragments");
  if (L.front().size() < q || L.back().size() < q) bad.push_back("boundary fragment shorter than q");

  if (dec.sample) {
    const Sample& s = *dec.sample;
    bool inside = false;
    for (size_t i = 0; i + 1 < L.size(); ++i) {
      Interval G = dec.gap(i);
      if (G.lo <= s.run_lo && s.run_hi <= G.hi && (s.run_lo - G.lo) % q == 0) inside = true;
    }
    if (!inside) bad.push_back("sample run not inside one gap");
    if (s.run_hi - s.run_lo + 1 != (3 * k + 9) * q) bad.push_back("sample run has wrong length");
    if (s.j1 != s.run_lo + (k + 4) * q || s.j2 != s.j1 + (k + 1) * q - 1)
      bad.push_back("sample is not the middle of its run");
  }
  return bad;
}

std::optional<Sample> choose_sample(const LockedDecomposition& decV, i64 m, i64 k) {
  const i64 q = decV.Q.q(), n = decV.S.size();
  const i64 wlo = n - m, whi = m - 1;  // W = V[|V|-m .. m)
  const i64 len = (3 * k + 9) * q;
  for (size_t i = 0; i + 1 < decV.locked.size(); ++i) {
    Interval G = decV.gap(i);
    i64 j = G.lo;
    if (j < wlo) j += ceil_div(wlo - j, q) * q;
    if (j + len - 1 <= std::min(G.hi, whi)) {
      Sample s;
      s.run_lo = j;
      s.run_hi = j + len - 1;
      s.j1 = j + (k + 4) * q;
      s.j2 = s.j1 + (k + 1) * q - 1;
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace kcpm
