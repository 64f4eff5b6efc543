#include "kcpm/pillar.hpp"

#include <algorithm>

namespace kcpm {

std::vector<i64> ArithProg::enumerate() const {
  std::vector<i64> out;
  out.reserve(static_cast<size_t>(count));
  for (i64 j = 0; j < count; ++j) out.push_back(first + j * step);
  return out;
}

namespace {

// Sorted cyclic shifts of s by prefix doubling with counting sort.
std::vector<int> sort_cyclic_shifts(const std::vector<int>& s, int alphabet) {
  const int n = static_cast<int>(s.size());
  std::vector<int> p(n), c(n), cnt(std::max(alphabet, n), 0);
  for (int x : s) cnt[x]++;
  for (int i = 1; i < alphabet; ++i) cnt[i] += cnt[i - 1];
  for (int i = n - 1; i >= 0; --i) p[--cnt[s[i]]] = i;
  c[p[0]] = 0;
  int classes = 1;
  for (int i = 1; i < n; ++i) {
    if (s[p[i]] != s[p[i - 1]]) ++classes;
    c[p[i]] = classes - 1;
  }
  std::vector<int> pn(n), cn(n);
  for (int h = 0; (1 << h) < n && classes < n; ++h) {
    const int len = 1 << h;
    for (int i = 0; i < n; ++i) {
      pn[i] = p[i] - len;
      if (pn[i] < 0) pn[i] += n;
    }
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (int i = 0; i < n; ++i) cnt[c[pn[i]]]++;
    for (int i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (int i = n - 1; i >= 0; --i) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (int i = 1; i < n; ++i) {
      int a = p[i], b = p[i - 1];
      int a2 = a + len >= n ? a + len - n : a + len;
      int b2 = b + len >= n ? b + len - n : b + len;
      if (c[a] != c[b] || c[a2] != c[b2]) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
  }
  return p;
}

}  // namespace

int StringStore::add(std::string_view s) { return add_many({s}).front(); }

std::vector<int> StringStore::add_many(const std::vector<std::string_view>& ss) {
  std::vector<int> ids;
  for (auto s : ss) {
    ids.push_back(static_cast<int>(strs_.size()));
    strs_.emplace_back(s);
  }
  rebuild();
  return ids;
}

Frag StringStore::whole(int sid) const {
  require(sid >= 0 && sid < count(), "unknown string id");
  return Frag{sid, 0, length(sid)};
}

std::string StringStore::extract(const Frag& f) const {
  require(valid(f), "invalid fragment");
  return strs_[f.sid].substr(static_cast<size_t>(f.lo), static_cast<size_t>(f.size()));
}

void StringStore::rebuild() {
  // Layout: s_0 # rev(s_0) # s_1 # ... with unique separators, then a sentinel.
  std::vector<int> text;
  fwd_off_.assign(strs_.size(), 0);
  rev_off_.assign(strs_.size(), 0);
  int sep = 257;
  for (size_t i = 0; i < strs_.size(); ++i) {
    fwd_off_[i] = static_cast<i64>(text.size());
    for (unsigned char ch : strs_[i]) text.push_back(static_cast<int>(ch) + 1);
    text.push_back(sep++);
    rev_off_[i] = static_cast<i64>(text.size());
    for (auto it = strs_[i].rbegin(); it != strs_[i].rend(); ++it)
      text.push_back(static_cast<int>(static_cast<unsigned char>(*it)) + 1);
    text.push_back(sep++);
  }
  text.push_back(0);
  total_ = static_cast<i64>(text.size());
  const int n = static_cast<int>(text.size());
  sa_ = sort_cyclic_shifts(text, sep);
  rank_.assign(n, 0);
  for (int i = 0; i < n; ++i) rank_[sa_[i]] = i;
  // Kasai: lcp_[r] = LCP(sa[r-1], sa[r]).
  lcp_.assign(n, 0);
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    int j = sa_[rank_[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp_[rank_[i]] = h;
    if (h > 0) --h;
  }
  log2_.assign(n + 1, 0);
  for (int i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
  sparse_.clear();
  sparse_.push_back(lcp_);
  for (int lv = 1; (1 << lv) <= n; ++lv) {
    const auto& prev = sparse_.back();
    std::vector<int> cur(n - (1 << lv) + 1);
    for (size_t i = 0; i < cur.size(); ++i)
      cur[i] = std::min(prev[i], prev[i + (1 << (lv - 1))]);
    sparse_.push_back(std::move(cur));
  }
}

i64 StringStore::lce_raw(i64 p, i64 q) const {
  if (p == q) return total_ - p;
  int a = rank_[p], b = rank_[q];
  if (a > b) std::swap(a, b);
  ++a;
  int lv = log2_[b - a + 1];
  return std::min(sparse_[lv][a], sparse_[lv][b - (1 << lv) + 1]);
}

i64 StringStore::lce(const Frag& a, const Frag& b, Dir dir) const {
  require(valid(a) && valid(b), "invalid fragment");
  i64 lim = std::min(a.size(), b.size());
  if (lim == 0) return 0;
  i64 p, q;
  if (dir == Dir::forward) {
    p = fwd_off_[a.sid] + a.lo;
    q = fwd_off_[b.sid] + b.lo;
  } else {
    p = rev_off_[a.sid] + (length(a.sid) - a.hi);
    q = rev_off_[b.sid] + (length(b.sid) - b.hi);
  }
  return std::min(lim, lce_raw(p, q));
}

ArithProg StringStore::ipm(const Frag& s, const Frag& t) const {
  require(t.size() <= 2 * s.size(), "ipm requires |t| <= 2|s|");
  std::vector<i64> occ;
  for (i64 j = 0; j + s.size() <= t.size(); ++j)
    if (lce(s, t.suffix_from(j)) >= s.size()) occ.push_back(j);
  ArithProg ap;
  if (occ.empty()) return ap;
  ap.first = occ.front();
  ap.count = static_cast<i64>(occ.size());
  ap.step = occ.size() > 1 ? occ[1] - occ[0] : 0;
  for (size_t i = 1; i < occ.size(); ++i)
    ensure(occ[i] - occ[i - 1] == ap.step, "ipm occurrences are not one progression");
  return ap;
}

unsigned char period_at(const StringStore& st, const Period& Q, i64 j) {
  return st.access(Q.base, mod(Q.shift + j, Q.q()));
}

i64 lce_period(const StringStore& st, const Frag& s, const Period& Q, i64 off) {
  const i64 q = Q.q();
  const i64 n = s.size();
  if (n == 0) return 0;
  const i64 o = mod(Q.shift + off, q);
  i64 l = st.lce(s, Q.base.suffix_from(o));
  if (l < std::min(n, q - o)) return l;
  i64 c = q - o;
  if (n <= c) return n;
  i64 l2 = st.lce(s.suffix_from(c), Q.base);
  if (l2 < std::min(n - c, q)) return c + l2;
  if (n - c <= q) return n;
  // s[c..c+q) = base, so agreement with base^∞ continues iff s agrees with itself shifted by q.
  return c + q + st.lce(s.suffix_from(c + q), s.suffix_from(c));
}

i64 lce_period_back(const StringStore& st, const Frag& s, const Period& Q, i64 off) {
  const i64 q = Q.q();
  const i64 n = s.size();
  if (n == 0) return 0;
  const i64 o = mod(Q.shift + off, q);
  i64 l = st.lce_back(s, Q.base.prefix(o));
  if (l < std::min(n, o)) return l;
  i64 c = o;
  if (n <= c) return n;
  Frag rest = s.prefix(n - c);
  i64 l2 = st.lce_back(rest, Q.base);
  if (l2 < std::min(n - c, q)) return c + l2;
  if (n - c <= q) return n;
  return c + q + st.lce_back(s.prefix(n - c - q), rest);
}

bool is_primitive(const StringStore& st, const Frag& Q) {
  const i64 q = Q.size();
  require(q > 0, "empty string is not primitive");
  for (i64 d = 1; d < q; ++d) {
    if (q % d != 0) continue;  // an occurrence at d forces period gcd(d, q)
    // Q occurs in QQ at d iff Q[d..q) = Q[0..q-d) and Q[0..d) = Q[q-d..q).
    if (st.lce(Q.suffix_from(d), Q) >= q - d && st.lce(Q.prefix(d), Q.suffix_from(q - d)) >= d)
      return false;
  }
  return true;
}

}  // namespace kcpm
