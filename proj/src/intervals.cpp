#include "kcpm/intervals.hpp"

#include <algorithm>
#include <json.hpp>

namespace kcpm {

Interval shift(const Interval& I, i64 b) {
  if (I.empty()) return Interval::empty_set();
  return Interval{I.lo + b, I.hi + b};
}

Interval minkowski_diff(const Interval& I, const Interval& J) {
  if (I.empty() || J.empty()) return Interval::empty_set();
  return Interval{I.lo - J.hi, I.hi - J.lo};
}

Interval ext(const Interval& I, i64 t) {
  if (I.empty()) return Interval::empty_set();
  return Interval{I.lo - t, I.hi + t};
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  return r.empty() ? Interval::empty_set() : r;
}

std::vector<Interval> merge_union(std::vector<Interval> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const Interval& I) { return I.empty(); }), v.end());
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<Interval> out;
  for (const auto& I : v) {
    if (!out.empty() && I.lo <= out.back().hi + 1)
      out.back().hi = std::max(out.back().hi, I.hi);
    else
      out.push_back(I);
  }
  return out;
}

std::vector<Interval> complement_within(const std::vector<Interval>& v, const Interval& range) {
  std::vector<Interval> out;
  if (range.empty()) return out;
  i64 cur = range.lo;
  for (const auto& I : merge_union(v)) {
    if (I.hi < cur) continue;
    if (I.lo > range.hi) break;
    if (I.lo > cur) out.push_back(Interval{cur, I.lo - 1});
    cur = std::max(cur, I.hi + 1);
    if (cur > range.hi) return out;
  }
  if (cur <= range.hi) out.push_back(Interval{cur, range.hi});
  return out;
}

std::vector<Interval> approx_congruent_filter(const Interval& I, i64 target, i64 d, i64 q) {
  require(q >= 1 && d >= 0, "approx_congruent_filter needs q >= 1, d >= 0");
  std::vector<Interval> out;
  if (I.empty()) return out;
  if (2 * d + 1 >= q) {
    out.push_back(I);
    return out;
  }
  i64 jmin = ceil_div(I.lo - target - d, q);
  i64 jmax = floor_div(I.hi - target + d, q);
  for (i64 j = jmin; j <= jmax; ++j) {
    Interval w = intersect(I, Interval{target + j * q - d, target + j * q + d});
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

bool Chain::member(i64 p) const {
  if (base.empty()) return false;
  if (count == 0 || diff == 0) return base.contains(p);
  // j ranges over copies whose span could hold p.
  i64 jlo = std::max<i64>(0, ceil_div(p - base.hi, diff));
  i64 jhi = std::min<i64>(count, floor_div(p - base.lo, diff));
  return jlo <= jhi;
}

std::vector<i64> Chain::materialize() const {
  std::vector<i64> out;
  if (base.empty()) return out;
  for (i64 j = 0; j <= count; ++j) {
    for (i64 p = base.lo; p <= base.hi; ++p) out.push_back(p + j * diff);
    if (diff == 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Chain Chain::canonical() const {
  if (base.empty()) return Chain{Interval::empty_set(), 0, 0};
  if (count == 0 || diff == 0) return Chain{base, 0, 0};
  if (base.size() >= diff) return Chain{Interval{base.lo, base.hi + count * diff}, 0, 0};
  return *this;
}

Chain chain_make(const Interval& I, i64 a, i64 q) {
  require(a >= 0, "chain count must be nonnegative");
  require(a == 0 || q > 0, "chain difference must be positive");
  return Chain{I, a, a == 0 ? 0 : q};
}

void PositionSet::add(const Chain& c) {
  Chain cc = c.canonical();
  if (!cc.empty()) chains_.push_back(cc);
}

void PositionSet::add_all(const PositionSet& o, i64 offset) {
  for (const auto& c : o.chains_) add(Chain{shift(c.base, offset), c.count, c.diff});
}

bool PositionSet::contains(i64 p) const {
  return std::any_of(chains_.begin(), chains_.end(), [p](const Chain& c) { return c.member(p); });
}

std::vector<i64> PositionSet::materialize() const {
  std::vector<i64> out;
  for (const auto& c : chains_) {
    auto m = c.materialize();
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PositionSet PositionSet::normalized() const {
  std::vector<Interval> plain;
  std::vector<Chain> chained;
  for (const auto& c : chains_) {
    if (c.count == 0) plain.push_back(c.base);
    else chained.push_back(c);
  }
  std::sort(chained.begin(), chained.end(), [](const Chain& a, const Chain& b) {
    if (a.base.lo != b.base.lo) return a.base.lo < b.base.lo;
    if (a.base.hi != b.base.hi) return a.base.hi < b.base.hi;
    return a.count != b.count ? a.count < b.count : a.diff < b.diff;
  });
  chained.erase(std::unique(chained.begin(), chained.end()), chained.end());
  PositionSet out;
  for (const auto& I : merge_union(plain)) out.chains_.push_back(Chain{I, 0, 0});
  out.chains_.insert(out.chains_.end(), chained.begin(), chained.end());
  std::stable_sort(out.chains_.begin(), out.chains_.end(),
                   [](const Chain& a, const Chain& b) { return a.base.lo < b.base.lo; });
  return out;
}

PositionSet PositionSet::compressed() const {
  auto runs = runs_of(materialize());
  PositionSet out;
  for (size_t i = 0; i < runs.size();) {
    size_t j = i + 1;
    if (j < runs.size() && runs[j].size() == runs[i].size()) {
      const i64 q = runs[j].lo - runs[i].lo;
      while (j + 1 < runs.size() && runs[j + 1].size() == runs[i].size() && runs[j + 1].lo - runs[j].lo == q) ++j;
      out.add(chain_make(runs[i], static_cast<i64>(j - i), q));
      i = j + 1;
    } else {
      out.add(runs[i]);
      i = j;
    }
  }
  return out;
}

PositionSet PositionSet::clipped(const Interval& range) const {
  PositionSet out;
  for (const auto& c : chains_) {
    if (c.count == 0) {
      out.add(intersect(c.base, range));
      continue;
    }
    // Canonical chains have |base| < diff, so at most one copy crosses each end of range.
    const i64 q = c.diff;
    i64 jlo = std::max<i64>(0, ceil_div(range.lo - c.base.hi, q));
    i64 jhi = std::min<i64>(c.count, floor_div(range.hi - c.base.lo, q));
    if (jlo > jhi) continue;
    i64 flo = std::max<i64>(jlo, ceil_div(range.lo - c.base.lo, q));
    i64 fhi = std::min<i64>(jhi, floor_div(range.hi - c.base.hi, q));
    if (flo <= fhi) {
      out.add(chain_make(shift(c.base, flo * q), fhi - flo, q));
      for (i64 j = jlo; j < flo; ++j) out.add(intersect(shift(c.base, j * q), range));
      for (i64 j = fhi + 1; j <= jhi; ++j) out.add(intersect(shift(c.base, j * q), range));
    } else {
      for (i64 j = jlo; j <= jhi; ++j) out.add(intersect(shift(c.base, j * q), range));
    }
  }
  return out;
}

PositionSet PositionSet::shifted(i64 offset) const {
  PositionSet out;
  out.add_all(*this, offset);
  return out;
}

std::string PositionSet::to_json(const std::string& mode, i64 k) const {
  nlohmann::json j;
  j["mode"] = mode;
  j["k"] = k;
  j["chains"] = nlohmann::json::array();
  for (const auto& c : normalized().chains_)
    j["chains"].push_back({{"lo", c.base.lo}, {"hi", c.base.hi}, {"count", c.count}, {"diff", c.diff}});
  return j.dump();
}

PositionSet PositionSet::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  PositionSet out;
  for (const auto& c : j.at("chains"))
    out.add(Chain{Interval{c.at("lo").get<i64>(), c.at("hi").get<i64>()}, c.at("count").get<i64>(),
                  c.at("diff").get<i64>()});
  return out;
}

std::vector<Interval> runs_of(const std::vector<i64>& sorted) {
  std::vector<Interval> out;
  for (i64 p : sorted) {
    if (!out.empty() && p == out.back().hi + 1) out.back().hi = p;
    else out.push_back(Interval{p, p});
  }
  return out;
}

PositionSet from_positions(const std::vector<i64>& positions) {
  std::vector<i64> v = positions;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  PositionSet out;
  for (const auto& I : runs_of(v)) out.add(I);
  return out;
}

}  // namespace kcpm
