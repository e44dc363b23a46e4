#pragma once
// Shared helpers for the unit tests: deterministic random elements.

#include <random>
#include <vector>

#include "rinehart/superpoly.hpp"

namespace rinehart::testutil {

// Random polynomial, homogeneous of the requested parity, drawn from a small
// variable pool.  Deterministic for a given generator state.
template <class C>
BasicSuperPoly<C> random_homogeneous(std::mt19937_64& rng, const ParityCase& pc,
                                     Parity target, int max_var = 5,
                                     int max_terms = 4, int max_exp = 3) {
  BasicSuperPoly<C> f;
  int wanted = 1 + static_cast<int>(rng() % max_terms);
  int guard = 0;
  while (wanted > 0 && guard++ < 200) {
    std::vector<std::pair<int, int>> factors;
    int nf = static_cast<int>(rng() % 4);
    for (int t = 0; t < nf; ++t) {
      int v = static_cast<int>(rng() % (max_var + 1));
      int e = pc.var(v) == Parity::odd ? 1 : 1 + static_cast<int>(rng() % max_exp);
      factors.emplace_back(v, e);
    }
    auto [sign, m] = canonicalize(std::move(factors), pc);
    if (sign == 0 || m.parity(pc) != target) continue;
    int c = static_cast<int>(rng() % 9) - 4;
    if (c == 0) c = 1;
    f.add_term(std::move(m), C(sign * c));
    --wanted;
  }
  return f;
}

}  // namespace rinehart::testutil
