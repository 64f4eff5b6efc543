#include <doctest.h>

#include <random>
#include <set>

#include "kcpm/intervals.hpp"

using namespace kcpm;

TEST_CASE("interval arithmetic") {
  CHECK(shift(Interval{1, 3}, 2) == Interval{3, 5});
  Interval e = ext(minkowski_diff(Interval{2, 4}, Interval{0, 1}), 1);
  CHECK(e == Interval{0, 5});
  CHECK(e.size() == 3 + 2 - 1 + 2);
  auto c = complement_within({Interval{2, 4}, Interval{1, 2}}, Interval{0, 9});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Interval{0, 0});
  CHECK(c[1] == Interval{5, 9});
  CHECK(Interval::from_half_open(3, 3).empty());
  CHECK(Interval::from_half_open(3, 5) == Interval{3, 4});
}

TEST_CASE("chains") {
  auto m = chain_make(Interval{3, 8}, 2, 8).materialize();
  std::vector<i64> want;
  for (i64 b : {3, 11, 19})
    for (i64 p = b; p < b + 6; ++p) want.push_back(p);
  CHECK(m == want);
  CHECK(chain_make(Interval{4, 6}, 0, 5).materialize() == std::vector<i64>{4, 5, 6});
  CHECK(chain_make(Interval{0, 2}, 2, 2).materialize() == std::vector<i64>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("chain membership matches materialization") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    i64 lo = static_cast<i64>(rng() % 30) - 10;
    Interval I{lo, lo + static_cast<i64>(rng() % 6) - 1};
    Chain c = chain_make(I, rng() % 5, 1 + rng() % 7);
    auto m = c.materialize();
    std::set<i64> s(m.begin(), m.end());
    for (i64 p = -15; p < 70; ++p) CHECK(c.member(p) == (s.count(p) > 0));
    CHECK(c.canonical().materialize() == m);
  }
}

TEST_CASE("approximate congruence") {
  CHECK_FALSE(approx_congruent(11, 21, 1, 8));
  CHECK(approx_congruent(11, 21, 3, 8));
  auto f = approx_congruent_filter(Interval{0, 20}, 3, 1, 10);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == Interval{2, 4});
  CHECK(f[1] == Interval{12, 14});
  auto whole = approx_congruent_filter(Interval{-4, 9}, 1, 4, 8);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == Interval{-4, 9});
}

TEST_CASE("approx_congruent_filter equals brute filter") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 2000; ++t) {
    i64 lo = static_cast<i64>(rng() % 60) - 30;
    Interval I{lo, lo + static_cast<i64>(rng() % 40)};
    i64 q = 1 + rng() % 12, d = rng() % 7, target = static_cast<i64>(rng() % 50) - 25;
    std::vector<i64> keep;
    for (i64 x = I.lo; x <= I.hi; ++x)
      if (approx_congruent(x, target, d, q)) keep.push_back(x);
    auto want = runs_of(keep);
    auto got = approx_congruent_filter(I, target, d, q);
    CHECK(got == want);
  }
}

TEST_CASE("union and double complement") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 500; ++t) {
    std::vector<Interval> v;
    for (int j = 0; j < 5; ++j) {
      i64 lo = rng() % 40;
      v.push_back(Interval{lo, lo + static_cast<i64>(rng() % 6) - 1});
    }
    Interval range{-5, 50};
    auto u = merge_union(v);
    CHECK(complement_within(complement_within(v, range), range) == u);
    std::set<i64> pts;
    for (const auto& I : v)
      for (i64 x = I.lo; x <= I.hi; ++x) pts.insert(x);
    CHECK(runs_of(std::vector<i64>(pts.begin(), pts.end())) == u);
  }
}

TEST_CASE("position sets") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    PositionSet ps;
    std::set<i64> pts;
    for (int j = 0; j < 4; ++j) {
      Chain c = chain_make(Interval{static_cast<i64>(rng() % 30), static_cast<i64>(rng() % 30)}, rng() % 4, 1 + rng() % 9);
      ps.add(c);
      for (i64 p : c.materialize()) pts.insert(p);
    }
    std::vector<i64> want(pts.begin(), pts.end());
    CHECK(ps.materialize() == want);
    CHECK(ps.normalized().materialize() == want);
    CHECK(PositionSet::from_json(ps.to_json("report", 1)).materialize() == want);
    Interval range{static_cast<i64>(rng() % 20), static_cast<i64>(rng() % 50)};
    std::vector<i64> clip;
    for (i64 p : want)
      if (range.contains(p)) clip.push_back(p);
    CHECK(ps.clipped(range).materialize() == clip);
    for (const auto& c : ps.normalized().chains()) CHECK(c.lo() >= 0);
  }
}

TEST_CASE("compressed folds equally spaced runs into chains") {
  PositionSet s;
  for (i64 p : Chain{Interval{3, 8}, 2, 8}.materialize()) s.add_point(p);
  auto c = s.compressed();
  REQUIRE(c.chain_count() == 1);
  CHECK(c.chains()[0] == Chain{Interval{3, 8}, 2, 8});

  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    PositionSet r;
    for (int j = 0; j < 6; ++j) {
      i64 lo = rng() % 60;
      r.add(chain_make(Interval{lo, lo + static_cast<i64>(rng() % 4)}, rng() % 4, 5 + rng() % 4));
    }
    CHECK(r.compressed().materialize() == r.materialize());
    CHECK(r.compressed().chain_count() <= runs_of(r.materialize()).size());
  }
}
