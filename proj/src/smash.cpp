#include "rinehart/smash.hpp"

#include <stdexcept>

namespace rinehart {

SmashZ gamma_oracle(int k, const ParityCase& pc) {
  if (k < 0) throw std::invalid_argument("gamma_oracle: negative power");
  SmashZ s;
  s.add(0, SuperPolyZ::constant(Int(1)));
  auto x0 = SuperPolyZ::variable(0);
  for (int t = 0; t < k; ++t) s = lmul_primitive(x0, s, pc);
  return s;
}

const SuperPolyZ& GammaTable::gamma(int k, int j) {
  if (k < 0) throw std::invalid_argument("gamma: negative k");
  auto key = std::make_pair(k, j);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  SuperPolyZ value;
  if (k == 0) {
    if (j == 0) value = SuperPolyZ::constant(Int(1));
  } else if (j >= 1 && j <= k) {
    if (k == 1) {
      value = SuperPolyZ::variable(0);
    } else {
      // Gamma_{k,j} = x0 delta(Gamma_{k-1,j})
      //             + (-1)^{|delta||Gamma_{k-1,j-1}|} x0 Gamma_{k-1,j-1}
      auto x0 = SuperPolyZ::variable(0);
      value = mul(x0, delta(gamma(k - 1, j), pc_), pc_);
      const SuperPolyZ& prev = gamma(k - 1, j - 1);
      if (!prev.is_zero()) {
        int sign = (pc_.delta == Parity::odd &&
                    expected_parity(k - 1, j - 1) == Parity::odd)
                       ? -1
                       : 1;
        value += Int(sign) * mul(x0, prev, pc_);
      }
    }
  }
  return memo_.emplace(key, std::move(value)).first->second;
}

SuperPolyZ y_element(int i, const ParityCase& pc) {
  auto y = SuperPolyZ::variable(0);
  auto x0 = SuperPolyZ::variable(0);
  for (int t = 0; t < i; ++t) y = mul(x0, delta(y, pc), pc);
  return y;
}

bool check_two_step_identities(GammaTable& table, int k, int j) {
  const ParityCase& pc = table.parity_case();
  if (!(pc == kEvenOdd))
    throw std::invalid_argument("check_two_step_identities: needs even x0, odd delta");
  if (k < 3 || j < 2 || j > k - 1)
    throw std::invalid_argument("check_two_step_identities: k >= 3 and 2 <= j <= k-1");

  auto x0 = SuperPolyZ::variable(0);
  auto x0sq = mul(x0, x0, pc);
  auto x0x1 = mul(x0, SuperPolyZ::variable(1), pc);
  const Int sgn = (k - j) % 2 ? -1 : 1;  // (-1)^{k-j}

  // one-step-in-k expansion
  auto lhs = table.gamma(k, j);
  auto rhs1 = mul(x0sq, table.gamma(k - 2, j - 2), pc) +
              sgn * mul(x0sq, delta(table.gamma(k - 2, j - 1), pc), pc) +
              mul(x0, delta(table.gamma(k - 1, j), pc), pc);

  // two-step expansion through delta^2
  auto rhs2 = mul(x0sq, table.gamma(k - 2, j - 2), pc) +
              mul(x0sq, delta(delta(table.gamma(k - 2, j), pc), pc), pc) +
              mul(x0x1, delta(table.gamma(k - 2, j), pc), pc) -
              sgn * mul(x0x1, table.gamma(k - 2, j - 1), pc);

  return lhs == rhs1 && lhs == rhs2;
}

ModPVanishing gamma_mod_p_vanishing(GammaTable& table, std::int64_t p) {
  require_odd_prime(p);
  ModPVanishing out;
  out.p = p;
  const int k = static_cast<int>(2 * p);
  for (int j = 3; j <= k - 1; ++j)
    out.per_j.emplace_back(j, divisible_by(table.gamma(k, j), p));
  return out;
}

}  // namespace rinehart
