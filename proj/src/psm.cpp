#include "kcpm/psm.hpp"

#include "kcpm/editkern.hpp"

namespace kcpm {

namespace {

bool disjoint_from(const Interval& I, const std::vector<Interval>& locked) {
  for (const auto& L : locked)
    if (!intersect(I, L).empty()) return false;
  return true;
}

// Anchored triads of `pat` at a, restricted to rotations that are windows of V
// and to offsets satisfying the congruence. `xoff` maps a triad rotation to its
// V position: x_V = x - xoff.
std::vector<Triad> app_matches(const StringStore& st, const PsmInstance& inst, const Frag& pat, i64 a,
                               const Interval& xwin, i64 xoff, PsmStats* stats) {
  if (stats) ++stats->anchor_calls;
  std::vector<Triad> out;
  for (const auto& tr : anchored(st, pat, inst.U, a, inst.k, xwin).triads)
    if (approx_congruent(tr.p, tr.x - xoff + inst.r, 77 * inst.k, inst.q())) out.push_back(tr);
  return out;
}

// Anchors every position of Js (clipped to [0..|U|]) with P itself.
PsmOutput anchor_offsets(const StringStore& st, const PsmInstance& inst, std::vector<Interval> Js, Mode mode,
                         PsmStats* stats) {
  PsmOutput out;
  const Interval xwin{inst.alpha, inst.alpha + inst.V.size() - inst.m};
  const Interval range{0, inst.U.size()};
  for (auto& J : Js) J = intersect(J, range);
  for (const auto& J : merge_union(Js))
    for (i64 a = J.lo; a <= J.hi; ++a)
      for (const auto& tr : app_matches(st, inst, inst.pattern(), a, xwin, inst.alpha, stats)) {
        if (mode == Mode::decide) {
          out.witness = tr.p;
          return out;
        }
        out.set.add(tr.starts());
      }
  return out;
}

// Anchors for a set of offsets: Δ + (m - α) ± k.
std::vector<Interval> anchors_for(const std::vector<Interval>& offsets, const PsmInstance& inst) {
  std::vector<Interval> Js;
  for (const auto& D : offsets) Js.push_back(ext(shift(D, inst.m - inst.alpha), inst.k));
  return Js;
}

}  // namespace

std::vector<std::string> validate(const StringStore& st, const PsmInstance& inst, const PsmParams& params) {
  std::vector<std::string> bad;
  const i64 m = inst.m, k = inst.k, q = inst.q(), nU = inst.U.size(), nV = inst.V.size();
  if (k < 1) bad.push_back("k < 1");
  if (q < 1) return {"empty period"};
  if (nU < m || 4 * nU > 7 * m + 12 * (k + 1)) bad.push_back("|U| outside [m .. 7m/4 + 3(k+1)]");
  // Halving an odd m leaves P2P1P2 one letter longer than 3m/2.
  if (nV < m || 2 * nV > 3 * m + 1) bad.push_back("|V| outside [m .. (3m+1)/2]");
  if (q * params.period_divisor * k > m) bad.push_back("period too long");
  if (inst.r < 0 || inst.r >= q) bad.push_back("r outside [0..q)");
  if (inst.P3.size() != 3 * m || st.lce(inst.P3, inst.P3.suffix_from(m)) < 2 * m)
    bad.push_back("P3 is not a cube of a length-m pattern");
  if (inst.alpha < 0 || inst.alpha >= m || inst.beta != inst.alpha + nV - 1 || inst.beta >= 2 * m ||
      !(inst.V == inst.P3.sub(std::min(inst.alpha, 3 * m), std::min<i64>(inst.beta + 1, 3 * m))))
    bad.push_back("V is not P^2[alpha..beta]");
  if (!is_primitive(st, inst.Q.base)) bad.push_back("Q is not primitive");
  if (!bad.empty()) return bad;
  if (!edp(st, inst.U, inst.Q, 112 * k).within()) bad.push_back("U is not almost Q-periodic");
  if (!edp(st, inst.V, inst.Q.rotated(inst.r), 112 * k).within()) bad.push_back("V is not almost rot^r(Q)-periodic");
  if (params.require_min_length && std::min(nU, nV) < 225 * k * q) bad.push_back("strings shorter than 225kq");
  return bad;
}

PsmPrepared prepare(const StringStore& st, const PsmInstance& inst, const PsmParams& params) {
  auto bad = validate(st, inst, params);
  require(bad.empty(), bad.empty() ? "" : bad.front().c_str());
  PsmPrepared prep;
  prep.inst = inst;
  prep.t = params.overlap_width > 0 ? params.overlap_width : inst.qhat();
  LockedParams lp{params.require_min_length};
  prep.decU = locked_decomposition(st, inst.U, inst.Q, inst.k, lp);
  prep.decV = locked_decomposition(st, inst.V, inst.Q, inst.k, lp);
  const bool small = 2 * inst.lambda() > inst.m;
  if (small && !params.sample_when_available) {
    prep.corner = true;
    return prep;
  }
  prep.decV.sample = choose_sample(prep.decV, inst.m, inst.k);
  if (!prep.decV.sample) {
    ensure(small, "no sample although lambda_k <= m/2");
    prep.corner = true;
  }
  return prep;
}

OffsetGeometry geometry(const PsmInstance& inst) {
  return OffsetGeometry{inst.m, inst.U.size(), inst.V.size(), inst.k, inst.r, inst.q()};
}

std::vector<Interval> overlap_set(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                                  const OffsetGeometry& g, i64 t) {
  const Interval range{-g.nV + 1, g.nU - 1};
  std::vector<Interval> out;
  for (const auto& Lu : lockU)
    for (const auto& Lv : lockV) {
      Interval base = minkowski_diff(ext(Lu, t), Lv);
      // Both sides shift by {-m, 0, m}, so the difference shifts by {-2m .. 2m}.
      for (i64 s = -2; s <= 2; ++s) out.push_back(intersect(shift(base, s * g.m), range));
    }
  return merge_union(out);
}

OffsetSets overlap_offsets(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                           const OffsetGeometry& g, i64 t) {
  OffsetSets out;
  out.lambda = overlap_set(lockU, lockV, g, t + g.k);
  for (const auto& I : out.lambda)
    for (const auto& G : approx_congruent_filter(I, g.r, 77 * g.k, g.q)) out.gamma.push_back(G);
  return out;
}

std::vector<Interval> nonov_intervals(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                                      const OffsetGeometry& g, i64 t) {
  return complement_within(overlap_set(lockU, lockV, g, t), Interval{-g.nV + 1, g.nU - 1});
}

std::optional<CritBounds> critical_bounds(const StringStore& st, const PsmPrepared& prep, const Interval& D) {
  const PsmInstance& inst = prep.inst;
  require(prep.decV.sample.has_value(), "critical positions need a sample");
  const Sample& s = *prep.decV.sample;
  const i64 len = (inst.k + 1) * inst.q();
  CritBounds cb;
  cb.scope = intersect(ext(Interval{s.j1 + D.lo, s.j2 + D.hi}, inst.k), Interval{0, inst.U.size() - 1});
  std::vector<i64> hits;
  for (i64 a = cb.scope.lo; a + len - 1 <= cb.scope.hi; ++a)
    if (lce_period(st, inst.U.sub(a, a + len), inst.Q, 0) == len) hits.push_back(a);
  if (hits.empty()) return std::nullopt;
  cb.i1 = hits.front();
  cb.i2 = hits.back();
  cb.step = hits.size() > 1 ? hits[1] - hits[0] : inst.q();
  for (size_t j = 1; j < hits.size(); ++j)
    if (hits[j] - hits[j - 1] != cb.step) cb.step = 0;  // not a progression
  return cb;
}

PsmOutput solve_overlap(const StringStore& st, const PsmPrepared& prep, i64 t, Mode mode, PsmStats* stats) {
  const PsmInstance& inst = prep.inst;
  OffsetSets os = overlap_offsets(prep.decU.locked, prep.decV.all_locked(), geometry(inst), t);
  if (stats) {
    stats->gamma_intervals += static_cast<i64>(os.gamma.size());
    for (const auto& G : os.gamma) stats->gamma_max_len = std::max(stats->gamma_max_len, G.size());
  }
  // Δ + δ is only ≡_{78k}-valid, hence the ±k around each Γ interval.
  return anchor_offsets(st, inst, anchors_for(os.gamma, inst), mode, stats);
}

PsmOutput solve_nonoverlap(const StringStore& st, const PsmPrepared& prep, Mode mode, PsmStats* stats) {
  const PsmInstance& inst = prep.inst;
  require(prep.decV.sample.has_value(), "non-overlap case needs a sample");
  const Sample& s = *prep.decV.sample;
  const i64 m = inst.m, q = inst.q(), nU = inst.U.size();
  // rot^y(P) starts at the sample: V[j1] = P[(j1 + alpha) mod m].
  const Frag rot = inst.rotation((s.j1 + inst.alpha) % m);
  const Interval xwin{m - s.j1, inst.V.size() - s.j1};
  const i64 xoff = m - s.j1;
  PsmOutput out;
  if (stats) ++stats->nonoverlap_runs;
  auto nonov = nonov_intervals(prep.decU.locked, prep.decV.all_locked(), geometry(inst), prep.t);
  if (stats) stats->nonov_intervals += static_cast<i64>(nonov.size());
  for (const auto& D : nonov) {
    auto cb = critical_bounds(st, prep, D);
    if (!cb) continue;
    if (cb->step != q || (cb->i2 - cb->i1) % q != 0 || !disjoint_from(cb->scope, prep.decU.locked)) {
      // The scope should be a locked-free power of Q; if not, anchor this D directly.
      if (stats) ++stats->per_offset_fallbacks;
      PsmOutput f = anchor_offsets(st, inst, anchors_for({D}, inst), mode, stats);
      if (mode == Mode::decide && f.witness) return f;
      out.set.add_all(f.set);
      continue;
    }
    auto Z1 = app_matches(st, inst, rot, cb->i1, xwin, xoff, stats);
    auto Z2 = cb->i2 == cb->i1 ? std::vector<Triad>{} : app_matches(st, inst, rot, cb->i2, xwin, xoff, stats);
    if (mode == Mode::decide) {
      if (!Z1.empty()) out.witness = Z1.front().p;
      else if (!Z2.empty()) out.witness = Z2.front().p;
      if (out.witness) return out;
      continue;
    }
    for (const auto& tr : Z1) out.set.add(tr.starts());
    for (const auto& tr : Z2) out.set.add(tr.starts());
    const i64 reps = (cb->i2 - cb->i1) / q;
    if (reps == 0) continue;
    for (const auto& tr : Z1) {
      // Only triads that are neither left- nor right-U-locked shift along the chain.
      Interval I = tr.starts(), J = tr.ends();
      if (I.lo > 0 && I.hi + m + inst.k <= nU && J.hi + 1 < nU &&
          disjoint_from(Interval{I.lo - 1, I.hi + 1}, prep.decU.locked) &&
          disjoint_from(Interval{J.lo - 1, J.hi + 1}, prep.decU.locked)) {
        out.set.add(chain_make(I, reps, q));
        if (stats) ++stats->chains;
      }
    }
  }
  return out;
}

PsmOutput corner_small_m(const StringStore& st, const PsmPrepared& prep, Mode mode, PsmStats* stats) {
  const PsmInstance& inst = prep.inst;
  if (stats) ++stats->corner;
  auto valid = approx_congruent_filter(Interval{-inst.V.size() + 1, inst.U.size() - 1}, inst.r, 77 * inst.k,
                                       inst.q());
  return anchor_offsets(st, inst, anchors_for(valid, inst), mode, stats);
}

PsmOutput solve(const StringStore& st, const PsmPrepared& prep, Mode mode, PsmStats* stats) {
  if (stats) ++stats->solved;
  if (prep.corner) return corner_small_m(st, prep, mode, stats);
  PsmOutput a = solve_overlap(st, prep, prep.t, mode, stats);
  if (mode == Mode::decide && a.witness) return a;
  PsmOutput b = solve_nonoverlap(st, prep, mode, stats);
  if (mode == Mode::decide) return b;
  a.set.add_all(b.set);
  return a;
}

}  // namespace kcpm
