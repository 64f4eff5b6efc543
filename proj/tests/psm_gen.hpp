#pragma once

// Random valid PeriodicSubMatch instances for the test suites.

#include <memory>
#include <random>
#include <string>

#include "kcpm/editkern.hpp"
#include "kcpm/oracle.hpp"
#include "kcpm/psm.hpp"

namespace kcpm::testgen {

struct GeneratedPsm {
  StringStore st;
  PsmInstance inst;
  std::string P, U, V, Q;
};

struct PsmShape {
  i64 qmin = 2, qmax = 4;
  i64 kmax = 2;
  i64 mmin = 16, mmax = 48;
  int sigma = 2;
};

inline std::unique_ptr<GeneratedPsm> random_psm(std::mt19937_64& rng, const PsmShape& shape,
                                                const PsmParams& params) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto g = std::make_unique<GeneratedPsm>();
    const i64 q = shape.qmin + rng() % (shape.qmax - shape.qmin + 1);
    const i64 k = 1 + rng() % shape.kmax;
    g->Q = oracle::random_primitive(rng, q, std::max<int>(shape.sigma, 2));
    i64 m = shape.mmin + rng() % (shape.mmax - shape.mmin + 1);
    g->P = oracle::plant_edits(rng, oracle::power_prefix(g->Q, m, rng() % q), rng() % (k + 1), shape.sigma);
    m = static_cast<i64>(g->P.size());
    if (m < 2) continue;
    const i64 nV = m + rng() % (m / 2 + 1);
    const i64 alpha = rng() % std::min(m, 2 * m - nV + 1);
    g->V = (g->P + g->P).substr(alpha, nV);
    const i64 nUmax = (7 * m + 12 * (k + 1)) / 4;
    i64 nU = m + rng() % (nUmax - m + 1);
    std::string U;
    if (rng() % 3 == 0) {
      // Plant a noisy window of V inside a periodic background.
      i64 x = rng() % (nV - m + 1);
      std::string w = oracle::plant_edits(rng, g->V.substr(x, m), rng() % (k + 2), shape.sigma);
      i64 left = rng() % (nU - m + 1);
      U = oracle::power_prefix(g->Q, left, rng() % q) + w;
      U += oracle::power_prefix(g->Q, std::max<i64>(0, nU - static_cast<i64>(U.size())), rng() % q);
    } else {
      U = oracle::plant_edits(rng, oracle::power_prefix(g->Q, nU, rng() % q), rng() % (3 * k + 1), shape.sigma);
    }
    g->U = U;
    auto ids = g->st.add_many({g->P + g->P + g->P, g->U, g->Q});
    PsmInstance& in = g->inst;
    in.Q = Period{g->st.whole(ids[2]), 0};
    in.m = m;
    in.k = k;
    in.alpha = alpha;
    in.beta = alpha + nV - 1;
    in.P3 = g->st.whole(ids[0]);
    in.U = g->st.whole(ids[1]);
    in.V = in.P3.sub(alpha, alpha + nV);
    i64 best = -1;
    for (i64 r = 0; r < q; ++r) {
      PeriodCost c = edp(g->st, in.V, in.Q.rotated(r), 112 * k);
      if (c.within() && (best < 0 || *c.cost < best)) {
        best = *c.cost;
        in.r = r;
      }
    }
    if (!validate(g->st, in, params).empty()) continue;
    return g;
  }
  return nullptr;
}

}  // namespace kcpm::testgen
