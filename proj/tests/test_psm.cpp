#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "kcpm/oracle.hpp"
#include "kcpm/psm.hpp"
#include "psm_gen.hpp"

using namespace kcpm;

namespace {

const PsmParams kRelaxed{2, false, true};

// Offsets p - x, p, x in range, with p in Ext_t(lockU) ⊕ {-m,0,m} and x in lockV ⊕ {-m,0,m}.
std::set<i64> brute_overlap(const std::vector<Interval>& lockU, const std::vector<Interval>& lockV,
                            const OffsetGeometry& g, i64 t) {
  std::set<i64> out;
  for (const auto& Lu : lockU)
    for (const auto& Lv : lockV)
      for (i64 a = Lu.lo - t; a <= Lu.hi + t; ++a)
        for (i64 b = Lv.lo; b <= Lv.hi; ++b)
          for (i64 su : {-g.m, i64{0}, g.m})
            for (i64 sv : {-g.m, i64{0}, g.m}) {
              i64 d = (a + su) - (b + sv);
              if (d > -g.nV && d < g.nU) out.insert(d);
            }
  return out;
}

std::set<i64> points(const std::vector<Interval>& v) {
  std::set<i64> out;
  for (const auto& I : v)
    for (i64 x = I.lo; x <= I.hi; ++x) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("overlap offsets on small layouts") {
  OffsetGeometry g{10, 12, 11, 0, 0, 2};
  CHECK(overlap_set({}, {Interval{1, 2}}, g, 1).empty());
  auto s = points(overlap_set({Interval{2, 4}}, {Interval{1, 2}}, g, 1));
  for (i64 d = -1; d <= 4; ++d) CHECK(s.count(d));
  CHECK(s.count(11));   // shifted by +m
  CHECK(s.count(-9));   // shifted by -m
  CHECK_FALSE(s.count(5));
}

TEST_CASE("overlap sets agree with enumeration and split the offset range") {
  std::mt19937_64 rng(91);
  for (int it = 0; it < 300; ++it) {
    OffsetGeometry g;
    g.m = 10 + rng() % 20;
    g.nU = g.m + rng() % 12;
    g.nV = g.m + rng() % (g.m / 2 + 1);
    g.k = rng() % 3;
    g.q = 2 + rng() % 3;
    g.r = rng() % g.q;
    auto rand_locked = [&](i64 n) {
      std::vector<Interval> v;
      i64 c = rng() % 3;
      for (i64 j = 0; j < c; ++j) {
        i64 lo = rng() % n;
        v.push_back(Interval{lo, std::min(n - 1, lo + static_cast<i64>(rng() % 4))});
      }
      return merge_union(v);
    };
    auto lu = rand_locked(g.nU), lv = rand_locked(g.nV);
    i64 t = rng() % 4;
    CHECK(points(overlap_set(lu, lv, g, t)) == brute_overlap(lu, lv, g, t));
    auto ov = points(overlap_set(lu, lv, g, t));
    auto non = points(nonov_intervals(lu, lv, g, t));
    for (i64 d : ov) CHECK_FALSE(non.count(d));
    CHECK(static_cast<i64>(ov.size() + non.size()) == g.nU + g.nV - 1);
  }
}

TEST_CASE("valid offsets form short intervals when q is large") {
  OffsetGeometry g{4000, 4100, 4500, 1, 3, 500};
  auto os = overlap_offsets({Interval{0, 600}, Interval{3500, 4099}}, {Interval{0, 700}, Interval{3900, 4499}}, g, 2);
  REQUIRE_FALSE(os.gamma.empty());
  for (const auto& G : os.gamma) {
    CHECK(G.size() <= 2 * 77 * g.k + 1);
    for (i64 d = G.lo; d <= G.hi; ++d) CHECK(approx_congruent(d, g.r, 77 * g.k, g.q));
  }
}

TEST_CASE("critical bounds step through exact copies of Q") {
  // V = Q^60, U = x Q^60 y so that U position a+1 lines up with V position a.
  std::string Q = "abc";
  std::string P = oracle::power_prefix(Q, 120);
  StringStore st;
  auto ids = st.add_many({P + P + P, "x" + oracle::power_prefix(Q, 180) + "y", Q});
  PsmInstance inst;
  inst.Q = Period{st.whole(ids[2]), 0};
  inst.m = 120;
  inst.k = 1;
  inst.alpha = 0;
  inst.beta = 179;
  inst.P3 = st.whole(ids[0]);
  inst.V = inst.P3.sub(0, 180);
  inst.U = st.whole(ids[1]);
  REQUIRE(validate(st, inst, {2, false, true}).empty());
  PsmPrepared prep = prepare(st, inst, {2, false, true});
  REQUIRE(prep.decV.sample.has_value());
  const Sample& s = *prep.decV.sample;
  auto cb = critical_bounds(st, prep, Interval{1, 1});
  REQUIRE(cb.has_value());
  CHECK(cb->step == 3);
  CHECK((cb->i1 - 1) % 3 == 0);
  CHECK(cb->i1 >= s.j1 + 1 - 1);
  CHECK(cb->i2 + 6 - 1 <= s.j2 + 1 + 1);
}

TEST_CASE("period-8 layout: equally spaced occurrences compress into one chain") {
  const std::string Qs = "defghabc";
  const std::string U = "defgh" + oracle::power_prefix("abcdefgh", 40);
  const std::string V = oracle::power_prefix("abcdefgh", 24);
  const i64 k = 2;
  // m = 23: every length-23 window of V, brute force.
  std::set<i64> all;
  for (i64 x = 0; x + 23 <= static_cast<i64>(V.size()); ++x)
    for (i64 p : oracle::occ(V.substr(x, 23), U, k)) all.insert(p);
  // The drawn chain, plus p = 0 where V[1..24) loses its leading "bc".
  CHECK(all.count(0));
  all.erase(0);
  auto cs = from_positions({all.begin(), all.end()}).compressed();
  REQUIRE(cs.chain_count() == 1);
  CHECK(cs.chains()[0] == chain_make(Interval{3, 8}, 2, 8));
  all.insert(0);
  auto psm = oracle::brute_psm(U, V, 23, 4, k, 8);  // the congruence is vacuous for 77k >= q
  CHECK(std::set<i64>(psm.begin(), psm.end()) == all);

  // m = 16 gives a valid sub-instance; the small-m corner equals the definition.
  const std::string P = V.substr(0, 16);
  StringStore st;
  auto ids = st.add_many({P + P + P, U, Qs});
  PsmInstance inst;
  inst.Q = Period{st.whole(ids[2]), 0};
  inst.m = 16;
  inst.k = k;
  inst.r = 4;
  inst.alpha = 0;
  inst.beta = 23;
  inst.P3 = st.whole(ids[0]);
  inst.V = inst.P3.sub(0, 24);
  inst.U = st.whole(ids[1]);
  PsmPrepared prep;
  prep.inst = inst;
  prep.corner = true;
  auto out = corner_small_m(st, prep, Mode::report);
  CHECK(out.set.materialize() == oracle::brute_psm(U, st.extract(inst.V), 16, 4, k, 8));
  auto d = corner_small_m(st, prep, Mode::decide);
  CHECK(d.witness.has_value() == !out.set.empty());
}

TEST_CASE("random instances match the definition") {
  std::mt19937_64 rng(92);
  testgen::PsmShape shape;
  int solved = 0, nonoverlap = 0, chains = 0;
  for (int it = 0; it < 400; ++it) {
    shape.sigma = 2 + it % 3;
    shape.mmax = it % 2 ? 48 : 90;
    auto g = testgen::random_psm(rng, shape, kRelaxed);
    if (!g) continue;
    PsmPrepared prep;
    try {
      prep = prepare(g->st, g->inst, kRelaxed);
    } catch (const InvariantError&) {
      continue;
    }
    PsmStats stats;
    auto rep = solve(g->st, prep, Mode::report, &stats);
    auto want = oracle::brute_psm(g->U, g->V, g->inst.m, g->inst.r, g->inst.k, g->inst.q());
    auto got = rep.set.materialize();
    CHECK_MESSAGE(got == want, "U=", g->U, " V=", g->V, " m=", g->inst.m, " k=", g->inst.k, " r=", g->inst.r,
                  " Q=", g->Q);
    auto dec = solve(g->st, prep, Mode::decide);
    CHECK(dec.witness.has_value() == !want.empty());
    if (dec.witness) CHECK(std::binary_search(want.begin(), want.end(), *dec.witness));
    ++solved;
    nonoverlap += stats.nonoverlap_runs;
    chains += static_cast<int>(stats.chains);
  }
  MESSAGE("solved ", solved, " non-overlap ", nonoverlap, " chains ", chains);
  CHECK(solved > 200);
  CHECK(nonoverlap > 50);
}

TEST_CASE("long instances reach the chain reporting") {
  // The default width qhat leaves no non-overlap offsets below m of a few
  // thousand, so the split is narrowed to (k+3)(q+2) + e.
  std::mt19937_64 rng(93);
  int solved = 0, chains = 0;
  const int iters = std::getenv("KCPM_LONG") ? std::atoi(std::getenv("KCPM_LONG")) : 60;
  for (int it = 0; it < iters; ++it) {
    testgen::PsmShape shape{2, 2 + it % 3, 1 + it % 2, 300, 480, 2 + it % 2};
    auto g = testgen::random_psm(rng, shape, kRelaxed);
    if (!g) continue;
    PsmParams params = kRelaxed;
    params.overlap_width = (g->inst.k + 3) * (g->inst.q() + 2) + it % 20;
    PsmPrepared prep;
    try {
      prep = prepare(g->st, g->inst, params);
    } catch (const InvariantError&) {
      continue;
    }
    PsmStats stats;
    auto got = solve(g->st, prep, Mode::report, &stats).set.materialize();
    auto want = oracle::brute_psm(g->U, g->V, g->inst.m, g->inst.r, g->inst.k, g->inst.q());
    CHECK_MESSAGE(got == want, "t=", prep.t, " q=", g->inst.q(), " k=", g->inst.k, " |got|=", got.size(),
                  " |want|=", want.size());
    auto dec = solve(g->st, prep, Mode::decide);
    CHECK(dec.witness.has_value() == !want.empty());
    ++solved;
    chains += static_cast<int>(stats.chains);
  }
  MESSAGE("solved ", solved, " chains ", chains);
  CHECK(chains > 0);
}
