#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "kcpm/anchors.hpp"
#include "kcpm/oracle.hpp"

using namespace kcpm;

namespace {

struct Case {
  StringStore st;
  Frag P, T;
  Case(const std::string& p, const std::string& t) {
    auto ids = st.add_many({p, t});
    P = st.whole(ids[0]);
    T = st.whole(ids[1]);
  }
};

}  // namespace

TEST_CASE("anchored golden examples") {
  Case c("abcbbbb", "bacbbcbacbcaaa");
  CHECK(anchored(c.st, c.P, c.T, 7, 2).starts().materialize() == std::vector<i64>{0, 1, 2, 3, 4});
  auto any = any_anchored(c.st, c.P, c.T, Interval{7, 7}, 2);
  REQUIRE(any.has_value());
  CHECK(*any <= 4);

  Case self("abcab", "abcab");
  CHECK(anchored(self.st, self.P, self.T, 0, 0).starts().contains(0));

  std::string P(99, 'a');
  P += 'b';
  Case ex(P, P + P);
  PositionSet u = anchored(ex.st, ex.P, ex.T, 0, 0).starts();
  u.add_all(anchored(ex.st, ex.P, ex.T, 100, 0).starts());
  CHECK(u.materialize().size() == 101);

  Case none("aaaaaaaa", "bbbbbbbb");
  CHECK_FALSE(any_anchored(none.st, none.P, none.T, Interval{0, 8}, 1).has_value());
}

TEST_CASE("triads enumerate exactly the x-anchored occurrences") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1500; ++t) {
    int sigma = t % 3 == 0 ? 2 : (t % 3 == 1 ? 4 : 26);
    std::string p = oracle::random_string(rng, 1 + rng() % 12, sigma);
    std::string text = rng() % 2 ? oracle::plant_edits(rng, oracle::rotate(p, rng() % p.size()) + oracle::random_string(rng, rng() % 8, sigma), rng() % 3, sigma)
                                 : oracle::random_string(rng, 1 + rng() % 20, sigma);
    i64 k = rng() % 4;
    i64 i = rng() % (text.size() + 1);
    Case c(p, text);
    AnchoredSet a = anchored(c.st, c.P, c.T, i, k);
    CHECK(static_cast<i64>(a.triads.size()) <= triad_bound(k));
    std::set<std::tuple<i64, i64, i64>> got;
    for (const auto& tr : a.triads)
      for (i64 j = 0; j < tr.len; ++j) got.emplace(tr.p + j, tr.last + j + 1, tr.x + j);
    auto want = oracle::brute_x_anchored(p, text, i, k);
    CHECK(std::vector<std::tuple<i64, i64, i64>>(got.begin(), got.end()) == want);
    CHECK(a.starts().materialize() == oracle::brute_anchored(p, text, i, k));
  }
}

TEST_CASE("triads on one line are maximal") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    std::string p = oracle::random_string(rng, 2 + rng() % 10, 2);
    std::string text = oracle::random_string(rng, 2 + rng() % 20, 2);
    i64 k = rng() % 3;
    Case c(p, text);
    AnchoredSet a = anchored(c.st, c.P, c.T, rng() % (text.size() + 1), k);
    for (size_t u = 0; u < a.triads.size(); ++u)
      for (size_t v = 0; v < a.triads.size(); ++v) {
        if (u == v || a.triads[u].d1 != a.triads[v].d1 || a.triads[u].d2 != a.triads[v].d2) continue;
        auto x = a.triads[u].rotations(), y = a.triads[v].rotations();
        CHECK((x.hi + 1 < y.lo || y.hi + 1 < x.lo));
      }
  }
}

TEST_CASE("rotation window restricts x only") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    std::string p = oracle::random_string(rng, 2 + rng() % 10, 2);
    std::string text = oracle::random_string(rng, 2 + rng() % 16, 2);
    i64 k = rng() % 3, i = rng() % (text.size() + 1);
    Interval w{static_cast<i64>(rng() % p.size()), static_cast<i64>(rng() % (p.size() + 1))};
    Case c(p, text);
    std::set<std::tuple<i64, i64, i64>> got;
    for (const auto& tr : anchored(c.st, c.P, c.T, i, k, w).triads)
      for (i64 j = 0; j < tr.len; ++j) got.emplace(tr.p + j, tr.last + j + 1, tr.x + j);
    std::set<std::tuple<i64, i64, i64>> want;
    for (auto [pp, e, x] : oracle::brute_x_anchored(p, text, i, k))
      if (w.contains(x)) want.emplace(pp, e, x);
    CHECK(got == want);
  }
}

TEST_CASE("any_anchored agrees with the brute union") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 400; ++t) {
    std::string p = oracle::random_string(rng, 3 + rng() % 8, 2 + t % 3);
    std::string text = oracle::random_string(rng, 3 + rng() % 16, 2 + t % 3);
    i64 k = rng() % 3;
    i64 lo = rng() % (text.size() + 1);
    Interval I{lo, lo + static_cast<i64>(rng() % 4)};
    Case c(p, text);
    std::set<i64> u;
    for (i64 i = lo; i <= std::min<i64>(I.hi, text.size()); ++i)
      for (i64 s : oracle::brute_anchored(p, text, i, k)) u.insert(s);
    auto got = any_anchored(c.st, c.P, c.T, I, k);
    CHECK(got.has_value() == !u.empty());
    if (got) CHECK(u.count(*got) == 1);
  }
}
