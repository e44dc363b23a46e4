#include "rinehart/scalar.hpp"

namespace rinehart {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p))
    throw NotPrime("modulus must be an odd prime >= 3, got " + std::to_string(p));
}

Int binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binom: negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int binom_gen(const Int& a, std::int64_t k) {
  if (k < 0) return 0;
  Int num = 1;
  for (std::int64_t t = 0; t < k; ++t) num *= a - t;
  return num / factorial(k);  // always exact
}

Int factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// ----------------------------------------------------------------- F_p -----

Fp::Fp(const Int& value, std::int64_t p) : p_(p) {
  require_odd_prime(p);
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  v_ = r.get_si();
}

Fp::Fp(std::int64_t value, std::int64_t p) : p_(p) {
  require_odd_prime(p);
  v_ = value % p;
  if (v_ < 0) v_ += p;
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_) throw std::logic_error("Fp: mixed moduli");
}

Fp Fp::operator-() const { return Fp(p_ - v_, p_); }
Fp Fp::operator+(const Fp& o) const { check_same(o); return Fp(v_ + o.v_, p_); }
Fp Fp::operator-(const Fp& o) const { check_same(o); return Fp(v_ - o.v_ + p_, p_); }
Fp Fp::operator*(const Fp& o) const { check_same(o); return Fp(v_ * o.v_, p_); }
Fp Fp::operator/(const Fp& o) const { check_same(o); return *this * o.inverse(); }

bool Fp::operator==(const Fp& o) const { check_same(o); return v_ == o.v_; }

Fp Fp::pow(std::uint64_t e) const {
  Fp acc(1, p_), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: division by zero");
  return pow(static_cast<std::uint64_t>(p_ - 2));
}

Fp int_mod_p(const Int& n, std::int64_t p) { return Fp(n, p); }

Fp rat_mod_p(const Rat& q, std::int64_t p) {
  require_odd_prime(p);
  Fp den = int_mod_p(q.get_den(), p);
  if (den.is_zero())
    throw DenominatorDivisibleByP("rat_mod_p: denominator of " + q.get_str() +
                                  " vanishes mod " + std::to_string(p));
  return int_mod_p(q.get_num(), p) / den;
}

// ----------------------------------------------- binomial-basis polynomials

BinomPoly::BinomPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_ = {Int(0)};
  normalize();
}

void BinomPoly::normalize() {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

Int BinomPoly::eval(const Int& m) const {
  Int acc = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) acc += c_[i] * binom_gen(m, static_cast<std::int64_t>(i));
  return acc;
}

BinomPoly BinomPoly::fit(const std::vector<Int>& values, std::int64_t m0,
                         int degree_cap) {
  if (values.empty()) throw InsufficientSamples("fit: no samples");
  std::size_t use = values.size();
  if (degree_cap >= 0) {
    if (values.size() < static_cast<std::size_t>(degree_cap) + 1)
      throw InsufficientSamples("fit: need " + std::to_string(degree_cap + 1) +
                                " samples, got " + std::to_string(values.size()));
    use = static_cast<std::size_t>(degree_cap) + 1;
  }

  // forward-difference table on the points that define the interpolant
  std::vector<Int> diff(values.begin(), values.begin() + use);
  std::vector<Int> newton;  // coefficients in the shifted basis C(m - m0, i)
  newton.reserve(use);
  for (std::size_t lvl = 0; lvl < use; ++lvl) {
    newton.push_back(diff[0]);
    for (std::size_t t = 0; t + 1 < diff.size(); ++t) diff[t] = diff[t + 1] - diff[t];
    diff.pop_back();
  }

  // rebase to the global basis: C(m - m0, i) = sum_j C(m, j) C(-m0, i-j)
  std::vector<Int> c(use, Int(0));
  for (std::size_t j = 0; j < use; ++j)
    for (std::size_t i = j; i < use; ++i)
      c[j] += newton[i] * binom_gen(Int(-m0), static_cast<std::int64_t>(i - j));

  BinomPoly poly(std::move(c));
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (poly.eval(Int(m0) + static_cast<long>(t)) != values[t])
      throw InconsistentSamples("fit: sample at m = " +
                                std::to_string(m0 + static_cast<long>(t)) +
                                " disagrees with the interpolant");
  }
  return poly;
}

BinomPoly BinomPoly::finite_difference() const {
  // C(m,i) - C(m-1,i) = C(m-1,i-1) and C(m-1,k) = sum_{j<=k} (-1)^{k-j} C(m,j)
  std::vector<Int> d(c_.size(), Int(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    Int acc = 0;
    int sign = 1;
    for (std::size_t i = j + 1; i < c_.size(); ++i) {
      acc += sign * c_[i];
      sign = -sign;
    }
    d[j] = acc;
  }
  return BinomPoly(std::move(d));
}

Rat BinomPoly::leading_monomial_coeff() const {
  if (is_zero()) return Rat(0);
  return make_rat(c_.back(), factorial(degree()));
}

}  // namespace rinehart
