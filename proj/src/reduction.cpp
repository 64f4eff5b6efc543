#include "kcpm/reduction.hpp"

#include <set>
#include <tuple>

#include "kcpm/anchors.hpp"
#include "kcpm/editkern.hpp"
#include "kcpm/oracle.hpp"

namespace kcpm {

std::vector<Frag> cover(const Frag& T, i64 len, i64 stride) {
  require(len >= 1 && stride >= 1, "cover needs positive length and stride");
  std::vector<Frag> out;
  const i64 n = T.size();
  for (i64 w = 0;; w += stride) {
    out.push_back(T.sub(w, std::min(n, w + len)));
    if (w + len >= n) break;
  }
  return out;
}

std::vector<Frag> split_windows(const Frag& T, i64 m, i64 k) {
  require(m >= 1, "empty pattern");
  return cover(T, 3 * m / 2 + k, std::max<i64>(1, m / 2));
}

PassView pass_view(const Frag& P3, i64 m, Half half) {
  PassView pv;
  pv.half = half;
  pv.m = m;
  const i64 b0 = half == Half::first ? 0 : m / 2;
  pv.h = half == Half::first ? m / 2 : m - m / 2;
  pv.Pv = P3.sub(b0, b0 + m);
  pv.P1 = pv.Pv.prefix(pv.h);
  pv.base = b0 + pv.h;
  pv.S = P3.sub(pv.base, pv.base + 2 * m - pv.h);
  return pv;
}

namespace {

// Smallest l >= l0 whose prefix (suffix) has distance >= ceil(8kl/m) to Q^∞,
// or nothing if the generator reaches the end of its string first.
std::optional<i64> repetitive_stop(EditGenerator& gen, i64 n, i64 l0, i64 m, i64 k) {
  i64 prev = -1;
  for (i64 d = 0;; ++d) {
    const i64 len = gen.next().first;
    // Lengths in (prev .. len] are at distance exactly d.
    const i64 lo = std::max(l0, prev + 1);
    const i64 hi = std::min(len, m * d / (8 * k));
    if (lo <= hi) return lo;
    if (len >= n) return std::nullopt;
    prev = len;
  }
}

// Longest prefix (suffix) with at most t edits, capped at `cap`.
i64 reach_within(const StringStore& st, const Frag& S, const Period& Q, Dir dir, i64 t, i64 cap) {
  EditGenerator gen(st, S, Q, dir);
  i64 len = 0;
  for (i64 e = 0; e <= t && len < cap; ++e) len = gen.next().first;
  return len;
}

// Letters to add before condition (c) fires: one more than the longest reach
// with 10k-1 edits over all tolerated rotations.
i64 extension(const StringStore& st, const Frag& S, const Period& Q, Dir dir, i64 center, i64 k) {
  const i64 cap = S.size();
  i64 best = 0;
  for (i64 x = center - 34 * k; x <= center + 34 * k && best < cap; ++x)
    best = std::max(best, reach_within(st, S, Q.rotated(x), dir, 10 * k - 1, cap) + 1);
  return std::min(best, cap);
}

}  // namespace

VResult compute_v(const StringStore& st, const Frag& P3, const PassView& pv, const Period& Q, i64 k) {
  require(k >= 1, "compute_v needs k >= 1");
  const i64 m = pv.m, h = pv.h;
  const i64 l0 = std::max(h, ceil_div(3 * m, 8));
  VResult v;

  const Frag right = pv.S.sub(m - h, 2 * m - h);  // P1 P2
  EditGenerator fwd(st, right, Q, Dir::forward);
  auto wr = repetitive_stop(fwd, right.size(), l0, m, k);
  v.w_len = wr ? *wr : right.size();
  if (wr) v.R_right = right.prefix(*wr);

  PeriodCost p1 = edp(st, pv.P1, Q, 2 * k);
  require(p1.within(), "Q is not an approximate period of P1");
  const Frag left = pv.S.sub(0, m);  // P2 P1
  EditGenerator bwd(st, left, Q.rotated(p1.witness), Dir::backward);
  auto zl = repetitive_stop(bwd, left.size(), l0, m, k);
  v.z_len = zl ? *zl : left.size();
  if (zl) v.R_left = left.suffix_from(m - *zl);

  const i64 vs = m - v.z_len, ve = m - h + v.w_len;
  v.alpha = (pv.base + vs) % m;
  v.V = P3.sub(v.alpha, v.alpha + ve - vs);
  v.beta = v.alpha + ve - vs - 1;
  const Frag Y = pv.S.sub(vs, m - h);
  v.y_len = eds(st, Y, Q, Y.size() + Q.q()).witness;
  return v;
}

UResult compute_u(const StringStore& st, const Frag& Twin, const Frag& tbar, const Period& Q, i64 k,
                  i64 p2len) {
  require(tbar.sid == Twin.sid && Twin.lo <= tbar.lo && tbar.hi <= Twin.hi, "tbar outside the window");
  UResult u;
  const i64 capR = std::min(Twin.hi - tbar.hi, p2len + k);
  const i64 capL = std::min(tbar.lo - Twin.lo, p2len + k);
  if (capR > 0)
    u.g_len = extension(st, Frag{tbar.sid, tbar.hi, tbar.hi + capR}, Q, Dir::forward, tbar.size(), k);
  if (capL > 0)
    u.x_len = extension(st, Frag{tbar.sid, tbar.lo - capL, tbar.lo}, Q, Dir::backward, 0, k);
  u.U = Frag{tbar.sid, tbar.lo - u.x_len, tbar.hi + u.g_len};
  const Frag X{tbar.sid, tbar.lo - u.x_len, tbar.lo};
  PeriodCost xc = eds(st, X, Q, X.size() + Q.q());
  u.x_within = xc.within();
  u.x_prime_len = xc.witness;
  return u;
}

i64 derive_r(i64 x_prime_len, i64 y_prime_len, i64 q) { return mod(x_prime_len - y_prime_len, q); }

ReductionResult reduce_window(const StringStore& st, const Frag& P3, const Frag& W, i64 k, Mode mode,
                              const ReductionParams& params, ReductionStats* stats) {
  require(k >= 1, "the reduction needs k >= 1");
  const i64 m = P3.size() / 3;
  ReductionResult res;
  ReductionStats local;
  ReductionStats& S = stats ? *stats : local;
  i64 anchors = 0;

  // true when decide mode has found a witness
  auto anchor = [&](const Frag& pat, i64 i) {
    ++anchors;
    for (const auto& tr : anchored(st, pat, W, i, k).triads) {
      if (mode == Mode::decide) {
        res.witness = tr.p;
        return true;
      }
      res.direct.add(tr.starts());
    }
    return false;
  };
  auto reject = [&](const std::string& why) {
    ++S.psm_rejected;
    if (S.reasons.size() < 64) S.reasons.push_back(why);
  };

  std::set<std::tuple<i64, i64, i64, i64, i64>> seen;
  for (Half half : {Half::first, Half::second}) {
    const PassView pv = pass_view(P3, m, half);
    std::set<std::pair<i64, i64>> regions_done;  // by (period block, shift)
    for (const Frag& Tp : cover(W, 3 * pv.h / 2 + k, std::max<i64>(1, pv.h / 2))) {
      ++S.inner;
      PeriodicAnalysis pa = analyze_periodic(st, pv.P1, Tp, k, params.periodic);
      if (pa.branch == Branch::sparse) ++S.sparse;
      if (pa.branch == Branch::periodic) ++S.periodic;
      if (pa.branch == Branch::fallback) ++S.fallback;
      if (pa.occ.empty()) continue;
      const i64 off = Tp.lo - W.lo;
      auto dense = [&]() {
        for (i64 i : pa.occ.positions)
          if (anchor(pv.Pv, off + i)) return true;
        return false;
      };
      if (pa.branch != Branch::periodic || !params.use_psm) {
        if (dense()) return res;
        continue;
      }

      const Period& Q = *pa.Q;
      VResult v = compute_v(st, P3, pv, Q, k);
      if (regions_done.insert({Q.base.lo, Q.shift}).second) {
        // Rotations through R_right start with P1, so Pv is anchored at each
        // occurrence; rotations through R_left start where R_left does.
        if (v.R_right)
          for (i64 i : occ_k(st, *v.R_right, W, k).positions) {
            ++S.region_occurrences;
            if (anchor(pv.Pv, i)) return res;
          }
        if (v.R_left) {
          const Frag Pr = P3.sub(pv.base + m - v.z_len, pv.base + 2 * m - v.z_len);
          for (i64 i : occ_k(st, *v.R_left, W, k).positions) {
            ++S.region_occurrences;
            if (anchor(Pr, i)) return res;
          }
        }
      }
      if (v.V.size() < m) continue;  // every rotation through P1 meets a region

      UResult u = compute_u(st, W, pa.tbar, Q, k, m - pv.h);
      std::string why;
      if (u.U.size() < m) why = "|U| < m";
      if (why.empty() && !u.x_within) why = "X not within budget";
      PsmJob job;
      if (why.empty()) {
        PsmInstance& in = job.inst;
        in.Q = Q.rotated(-u.x_prime_len);
        in.m = m;
        in.k = k;
        in.r = derive_r(u.x_prime_len, v.y_len, Q.q());
        in.alpha = v.alpha;
        in.beta = v.beta;
        in.U = u.U;
        in.V = v.V;
        in.P3 = P3;
        auto bad = validate(st, in, params.psm);
        if (!bad.empty()) why = bad.front();
      }
      if (!why.empty()) {
        reject(why);
        ++S.dense_fallbacks;
        if (dense()) return res;
        continue;
      }
      auto key = std::make_tuple(job.inst.U.lo, job.inst.U.hi, job.inst.alpha, job.inst.V.size(), job.inst.r);
      if (!seen.insert(key).second) {
        ++S.psm_duplicates;
        continue;
      }
      job.u_offset = job.inst.U.lo - W.lo;
      ++S.psm_instances;
      res.instances.push_back(job);
    }
  }
  S.anchor_calls += anchors;
  S.max_window_anchors = std::max(S.max_window_anchors, anchors);
  return res;
}

std::unique_ptr<Problem> make_problem(std::string_view P, std::string_view T) {
  require(!P.empty(), "empty pattern");
  auto pr = std::make_unique<Problem>();
  std::string P3 = std::string(P) + std::string(P) + std::string(P);
  auto ids = pr->st.add_many({P3, T});
  pr->P3 = pr->st.whole(ids[0]);
  pr->T = pr->st.whole(ids[1]);
  pr->m = static_cast<i64>(P.size());
  return pr;
}

namespace {

CircOccResult exact_path(const Problem& pr, Mode mode) {
  CircOccResult out;
  const i64 m = pr.m, n = pr.T.size();
  const Frag PP = pr.P3.sub(0, 2 * m - 1);  // every rotation of P is a length-m fragment
  for (i64 p = 0; p + m <= n; ++p) {
    if (pr.st.ipm(pr.T.sub(p, p + m), PP).empty()) continue;
    if (mode == Mode::decide) {
      out.witness = p;
      return out;
    }
    out.set.add_point(p);
  }
  out.set = out.set.compressed();
  return out;
}

CircOccResult small_pattern(const Problem& pr, i64 k, Mode mode) {
  CircOccResult out;
  auto rep = oracle::brute_circocc(pr.st.extract(pr.pattern()), pr.st.extract(pr.T), k);
  if (mode == Mode::decide) {
    if (!rep.positions.empty()) out.witness = rep.positions.front();
    return out;
  }
  out.set = from_positions(rep.positions).compressed();
  return out;
}

}  // namespace

CircOccResult circ_occ(const Problem& pr, i64 k, Mode mode, const ReductionParams& params) {
  require(k >= 0, "k must be nonnegative");
  require(pr.m >= 1, "empty pattern");
  if (k == 0) return exact_path(pr, mode);
  if (pr.m <= 8 * k) return small_pattern(pr, k, mode);

  CircOccResult out;
  const i64 m = pr.m, n = pr.T.size();
  const i64 stride = std::max<i64>(1, m / 2);
  auto windows = split_windows(pr.T, m, k);
  for (size_t j = 0; j < windows.size(); ++j) {
    const Frag& W = windows[j];
    ++out.stats.windows;
    ReductionResult res = reduce_window(pr.st, pr.P3, W, k, mode, params, &out.stats);
    const i64 w0 = W.lo - pr.T.lo;
    if (res.witness) {
      out.witness = w0 + *res.witness;
      return out;
    }
    PositionSet found = res.direct;
    for (const auto& job : res.instances) {
      PsmPrepared prep;
      try {
        prep = prepare(pr.st, job.inst, params.psm);
      } catch (const InvariantError& e) {
        // Locked fragments could not be certified; anchor this U directly.
        out.stats.reasons.push_back(e.what());
        ++out.stats.dense_fallbacks;
        PsmOutput f = corner_small_m(pr.st, PsmPrepared{job.inst, {}, {}, true, 0}, mode, &out.stats.psm);
        if (mode == Mode::decide && f.witness) {
          out.witness = w0 + job.u_offset + *f.witness;
          return out;
        }
        found.add_all(f.set, job.u_offset);
        continue;
      }
      PsmOutput o = solve(pr.st, prep, mode, &out.stats.psm);
      if (mode == Mode::decide) {
        if (o.witness) {
          out.witness = w0 + job.u_offset + *o.witness;
          return out;
        }
        continue;
      }
      found.add_all(o.set, job.u_offset);
    }
    if (mode == Mode::decide) continue;
    const i64 resp_hi = j + 1 == windows.size() ? n - 1 - w0 : stride - 1;
    out.set.add_all(found.clipped(Interval{0, resp_hi}), w0);
  }
  out.stats.chains_out = static_cast<i64>(out.set.chain_count());
  return out;
}

}  // namespace kcpm
