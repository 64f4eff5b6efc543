#include "kcpm/keditpm.hpp"

#include "kcpm/editkern.hpp"
#include "kcpm/wavefront.hpp"

namespace kcpm {

OccSet occ_k(const StringStore& st, const Frag& X, const Frag& Y, i64 k) {
  require(k >= 0, "k must be nonnegative");
  OccSet out;
  const i64 m = X.size(), n = Y.size();
  for (i64 p = 0; p < n; ++p) {
    const Frag rest = Y.suffix_from(p);
    auto wf = make_wavefront(m, n - p, [&](i64 a, i64 b) {
      return st.lce(X.suffix_from(a), rest.suffix_from(b));
    });
    for (i64 e = 0; e <= k; ++e) wf.advance();
    // Reaching a = m on diagonal d means δ_E(X, Y[p..p+m+d)) <= k.
    i64 best = -1;
    for (i64 d = -k; d <= k; ++d)
      if (m + d >= 1 && wf.reach(k, d) == m) best = p + m + d;
    if (best < 0) continue;
    out.positions.push_back(p);
    out.max_end = std::max(out.max_end, best);
  }
  return out;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::sparse:
      return "sparse";
    case Branch::periodic:
      return "periodic";
    case Branch::fallback:
      return "fallback";
  }
  return "?";
}

namespace {

std::optional<Period> find_period(const StringStore& st, const Frag& P, i64 k, i64 divisor,
                                  i64& cost) {
  const i64 m = P.size();
  for (i64 q = 1; q * divisor * k <= m; ++q) {
    // Fewer than 2k edits leave one of the first 2k blocks untouched, and that
    // block is a rotation of the period.
    for (i64 j = 0; j < 2 * k && (j + 1) * q <= m; ++j) {
      Frag block = P.sub(j * q, (j + 1) * q);
      if (!is_primitive(st, block)) continue;
      PeriodCost l = edl(st, P, Period{block, 0}, 2 * k - 1);
      if (!l.within()) continue;
      cost = *l.cost;
      return Period{block, l.witness};
    }
  }
  return std::nullopt;
}

}  // namespace

PeriodicAnalysis analyze_periodic(const StringStore& st, const Frag& P, const Frag& T, i64 k,
                                  const PeriodicParams& params) {
  require(k >= 1, "periodic analysis needs k >= 1");
  require(2 * T.size() <= 3 * P.size() + 2 * k, "text too long for one analysis window");
  PeriodicAnalysis out;
  out.occ = occ_k(st, P, T, k);
  const i64 m = P.size(), n = T.size();
  if (out.occ.empty() || (out.occ.size() / k) * m <= params.sparse_factor * n * k) {
    out.branch = Branch::sparse;
    return out;
  }
  out.branch = Branch::fallback;
  i64 cost = 0;
  auto Q = find_period(st, P, k, params.period_divisor, cost);
  if (!Q) {
    out.reason = "no short period within 2k edits";
    return out;
  }
  // The edl witness rotation makes prefix and substring costs agree.
  PeriodCost p = edp(st, P, *Q, cost);
  if (!p.within() || *p.cost != cost) {
    out.reason = "edp differs from edl";
    return out;
  }
  const Frag tbar = T.sub(out.occ.positions.front(), out.occ.max_end);
  PeriodCost t = edp(st, tbar, *Q, 24 * k);
  if (!t.within()) {
    out.reason = "trimmed text is not almost periodic";
    return out;
  }
  OccSet inner = occ_k(st, P, tbar, k);
  if (inner.size() != out.occ.size()) {
    out.reason = "trimming lost occurrences";
    return out;
  }
  for (i64 i : inner.positions)
    if (!approx_congruent(i, 0, 24 * k, Q->q())) {
      out.reason = "occurrence off the period grid";
      return out;
    }
  out.branch = Branch::periodic;
  out.Q = Q;
  out.tbar = tbar;
  out.edp_pattern = cost;
  out.edp_text = *t.cost;
  return out;
}

}  // namespace kcpm
