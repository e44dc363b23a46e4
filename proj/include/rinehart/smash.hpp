#pragma once
// Smash product V # H where H is generated by a primitive delta acting on the
// polynomial ring V by the shift derivation.  Elements are finite sums
// sum_j v_j # delta^j, and powers of x0 # delta expand as
//   (x0 # delta)^k = sum_{j=1}^{k} Gamma_{k,j} # delta^j.
// The Gamma table is computed two independent ways: by the recursion in k and
// by genuinely multiplying out the power in the smash product (the oracle).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rinehart/superpoly.hpp"

namespace rinehart {

template <class C>
struct BasicSmash {
  std::map<int, BasicSuperPoly<C>> comp;  // j -> coefficient of delta^j

  void add(int j, const BasicSuperPoly<C>& f) {
    if (f.is_zero()) return;
    auto it = comp.find(j);
    if (it == comp.end()) {
      comp.emplace(j, f);
    } else {
      it->second += f;
      if (it->second.is_zero()) comp.erase(it);
    }
  }
  bool operator==(const BasicSmash&) const = default;
};

using SmashZ = BasicSmash<Int>;

// Left multiplication by v # delta:
//   (v # delta)(w # delta^j) =
//       (-1)^{|w||delta|} v w # delta^{j+1}  +  v delta(w) # delta^j
// applied termwise in w so inhomogeneous components get their own signs.
template <class C>
BasicSmash<C> lmul_primitive(const BasicSuperPoly<C>& v, const BasicSmash<C>& s,
                             const ParityCase& pc) {
  BasicSmash<C> r;
  for (auto& [j, w] : s.comp) {
    BasicSuperPoly<C> signed_w;
    for (auto& [m, c] : w.terms) {
      bool flip =
          pc.delta == Parity::odd && m.parity(pc) == Parity::odd;
      signed_w.add_term(m, flip ? C(-c) : c);
    }
    r.add(j + 1, mul(v, signed_w, pc));
    r.add(j, mul(v, delta(w, pc), pc));
  }
  return r;
}

// (x0 # delta)^k by iterated left multiplication; no recursion involved.
SmashZ gamma_oracle(int k, const ParityCase& pc);

// Memoized Gamma_{k,j} table for one parity case.  Outside 1 <= j <= k the
// table is zero (extended domain), and Gamma_{0,0} = 1.
class GammaTable {
 public:
  explicit GammaTable(const ParityCase& pc) : pc_(pc) {}

  const SuperPolyZ& gamma(int k, int j);
  const ParityCase& parity_case() const { return pc_; }

  // parity of Gamma_{k,j} read off the grading: k|x0| + (k-j)|delta|
  Parity expected_parity(int k, int j) const {
    return parity_of(k * static_cast<int>(pc_.x0) +
                     (k - j) * static_cast<int>(pc_.delta));
  }

 private:
  ParityCase pc_;
  std::map<std::pair<int, int>, SuperPolyZ> memo_;
};

// Y_i = (x0 delta)^i (x0); Y_{k-1} coincides with Gamma_{k,1}.
SuperPolyZ y_element(int i, const ParityCase& pc);

// Exact verification of the two expansions of Gamma_{k,j} that step k down by
// one resp. two (even x0 / odd delta only).  Requires k >= 3, 2 <= j <= k-1.
bool check_two_step_identities(GammaTable& table, int k, int j);

struct ModPVanishing {
  std::int64_t p = 0;
  std::vector<std::pair<int, bool>> per_j;  // (j, every coefficient = 0 mod p)
  bool all() const {
    for (auto& [j, ok] : per_j)
      if (!ok) return false;
    return true;
  }
};

// Divisibility of the whole middle band Gamma_{2p,j}, 3 <= j <= 2p-1.
ModPVanishing gamma_mod_p_vanishing(GammaTable& table, std::int64_t p);

}  // namespace rinehart
