#include "kcpm/anchors.hpp"

#include "kcpm/wavefront.hpp"

namespace kcpm {

PositionSet AnchoredSet::starts() const {
  PositionSet out;
  for (const auto& t : triads) out.add(t.starts());
  return out;
}

AnchoredSet anchored(const StringStore& st, const Frag& P, const Frag& T, i64 i, i64 k,
                     std::optional<Interval> xwin) {
  require(k >= 0, "k must be nonnegative");
  require(0 <= i && i <= T.size(), "anchor outside the text");
  const i64 m = P.size();
  const i64 n = T.size();
  const Interval win = xwin ? intersect(*xwin, Interval{0, m}) : Interval{0, m};
  AnchoredSet out;
  out.anchor = i;
  if (win.empty()) return out;

  // Left of the anchor: suffixes of P against T[..i), both read right to left.
  auto back = make_wavefront(m, i, [&](i64 a, i64 b) {
    return st.lce_back(P.prefix(m - a), T.prefix(i - b));
  });
  // Right of the anchor: prefixes of P against T[i..).
  auto fwd = make_wavefront(m, n - i, [&](i64 a, i64 b) {
    return st.lce(P.suffix_from(a), T.suffix_from(i + b));
  });
  for (i64 e = 0; e <= k; ++e) {
    back.advance();
    fwd.advance();
  }
  using WF = decltype(back);

  for (i64 d1 = -k; d1 <= k; ++d1) {
    const i64 r1 = k - (d1 < 0 ? -d1 : d1);
    for (i64 d2 = -r1; d2 <= r1; ++d2) {
      if (m + d1 + d2 < 1) continue;
      std::vector<Interval> xs;
      const i64 ad1 = d1 < 0 ? -d1 : d1, ad2 = d2 < 0 ? -d2 : d2;
      for (i64 e1 = ad1; e1 + ad2 <= k; ++e1) {
        i64 rb = back.reach(e1, d1);
        i64 rf = fwd.reach(k - e1, d2);
        if (rb == WF::kNone || rf == decltype(fwd)::kNone) continue;
        Interval I{std::max({m - rb, std::max<i64>(0, -d2), win.lo}),
                   std::min({m - std::max<i64>(0, -d1), rf, win.hi})};
        if (!I.empty()) xs.push_back(I);
      }
      for (const auto& I : merge_union(xs)) {
        Triad t;
        t.x = I.lo;
        t.len = I.size();
        t.d1 = d1;
        t.d2 = d2;
        t.p = i - (m - I.lo) - d1;
        t.last = i + I.lo + d2 - 1;
        out.triads.push_back(t);
      }
    }
  }
  return out;
}

std::optional<i64> any_anchored(const StringStore& st, const Frag& P, const Frag& T, const Interval& I,
                                i64 k) {
  for (i64 i = std::max<i64>(0, I.lo); i <= std::min(I.hi, T.size()); ++i) {
    AnchoredSet a = anchored(st, P, T, i, k);
    if (!a.empty()) return a.triads.front().p;
  }
  return std::nullopt;
}

}  // namespace kcpm
