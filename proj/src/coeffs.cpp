#include "rinehart/coeffs.hpp"

#include <stdexcept>
#include <utility>

namespace rinehart {

namespace {

Rat half() { return Rat(1, 2); }

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

MuTable::MuTable(int k_max) {
  rows_.push_back({half(), half()});  // k = 3
  extend(k_max);
}

void MuTable::extend(int k_max) {
  for (int k = static_cast<int>(rows_.size()) + 3; k <= k_max; ++k) {
    const auto& prev = rows_.back();  // row k-1, indices 0..k-3
    std::vector<Rat> row(k - 1);
    row[0] = prev[0] + sign_pow(k);
    for (int i = 1; i <= k - 3; ++i)
      row[i] = prev[i - 1] + Rat(sign_pow(i)) * prev[i];
    row[k - 2] = half();
    rows_.push_back(std::move(row));
  }
}

const Rat& MuTable::mu(int k, int i) {
  if (k < 3 || i < 0 || i > k - 2)
    throw std::out_of_range("mu(k, i) needs k >= 3 and 0 <= i <= k-2");
  if (k > k_max()) extend(k);
  return rows_[k - 3][i];
}

Rat mu_closed(int k, int i) {
  if (k < 4 || i < 0 || i > k - 2)
    throw std::out_of_range("mu_closed(k, i) needs k >= 4 and 0 <= i <= k-2");
  const std::int64_t j = i / 2;
  if (k % 2 == 0) {
    const std::int64_t r = (k - 2) / 2;
    if (i % 2 == 0) return half() * binom(r, j) + binom(r - 1, j);
    return -Rat(binom(r - 1, j + 1));
  }
  const std::int64_t r = (k - 3) / 2;
  if (i % 2 == 0) return half() * binom(r, j);
  return half() * binom(r, j) + binom(r, j + 1);
}

std::vector<Rat> simplified_coefficients(MuTable& table, int k) {
  if (k < 3) throw std::out_of_range("simplified_coefficients needs k >= 3");
  std::vector<Rat> out;
  if (k % 2 == 1) {
    // pairs {i, k-2-i} never meet; both factors can be reordered freely
    for (int i = 0; i <= (k - 3) / 2; ++i)
      out.push_back(table.mu(k, i) + table.mu(k, k - 2 - i));
  } else {
    // both factors share the parity of i, so the swap costs (-1)^i
    const int mid = (k - 2) / 2;
    for (int i = 0; i < mid; ++i)
      out.push_back(table.mu(k, i) + Rat(sign_pow(i)) * table.mu(k, k - 2 - i));
    out.push_back(table.mu(k, mid));
  }
  return out;
}

LambdaVector lambda_from_mu(std::int64_t p) {
  require_odd_prime(p);
  MuTable table(static_cast<int>(2 * p));
  LambdaVector v;
  v.p = p;
  for (std::int64_t i = 0; i < p; ++i) {
    Rat value = (i == p - 1)
                    ? table.mu(2 * p, static_cast<int>(p - 1))
                    : table.mu(2 * p, static_cast<int>(i)) +
                          Rat(sign_pow(i)) *
                              table.mu(2 * p, static_cast<int>(2 * p - 2 - i));
    v.entries.push_back(rat_mod_p(value, p));
  }
  return v;
}

LambdaVector lambda_closed(std::int64_t p) {
  require_odd_prime(p);
  LambdaVector v;
  v.p = p;
  for (std::int64_t i = 0; i < p; ++i) {
    std::int64_t value = (i == p - 1) ? sign_pow((p - 1) / 2)
                         : (i % 2 == 0) ? 2 * sign_pow(i / 2)
                                        : 2 * sign_pow((i - 1) / 2);
    v.entries.push_back(Fp(value, p));
  }
  return v;
}

LambdaVector lambda_vector(std::int64_t p) {
  auto from_mu = lambda_from_mu(p);
  if (!(from_mu == lambda_closed(p)))
    throw std::logic_error("lambda routes disagree at p = " + std::to_string(p));
  return from_mu;
}

Gamma2Decomposition gamma2_decompose(GammaTable& gammas, MuTable& mus, int k) {
  if (k < 3) throw std::out_of_range("gamma2_decompose needs k >= 3");
  if (!(gammas.parity_case() == kEvenOdd))
    throw std::invalid_argument(
        "gamma2_decompose expects the even x0 / odd delta grading");
  const ParityCase& pc = gammas.parity_case();

  Gamma2Decomposition d;
  d.k = k;
  SuperPolyQ sum;
  for (int i = 0; i <= k - 2; ++i) {
    d.mu_row.push_back(mus.mu(k, i));
    auto prod = mul(to_rational(y_element(i, pc)),
                    to_rational(y_element(k - 2 - i, pc)), pc);
    sum += d.mu_row.back() * prod;
  }
  d.exact = sum == to_rational(gammas.gamma(k, 2));
  return d;
}

}  // namespace rinehart
