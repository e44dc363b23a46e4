#pragma once
// Exact scalars used everywhere else: GMP-backed integers and rationals,
// residues mod an odd prime, and integer-valued polynomials written in the
// binomial basis C(m,0), C(m,1), ...

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rinehart {

using Int = mpz_class;
using Rat = mpq_class;

struct NotPrime : std::domain_error {
  explicit NotPrime(const std::string& w) : std::domain_error(w) {}
};
struct DenominatorDivisibleByP : std::domain_error {
  explicit DenominatorDivisibleByP(const std::string& w) : std::domain_error(w) {}
};
struct InconsistentSamples : std::domain_error {
  explicit InconsistentSamples(const std::string& w) : std::domain_error(w) {}
};
struct InsufficientSamples : std::domain_error {
  explicit InsufficientSamples(const std::string& w) : std::domain_error(w) {}
};

// Rational in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_odd_prime(std::int64_t p);
void require_odd_prime(std::int64_t p);  // throws NotPrime

// C(n,k); zero when k < 0 or k > n.  Requires n >= 0.
Int binom(std::int64_t n, std::int64_t k);

// Generalized binomial C(a,k) = a(a-1)...(a-k+1)/k! for arbitrary integer a.
Int binom_gen(const Int& a, std::int64_t k);

Int factorial(std::int64_t n);

// ----------------------------------------------------------------- F_p -----

// Residue mod an odd prime p >= 3, value kept in [0, p).
class Fp {
 public:
  Fp(const Int& value, std::int64_t p);
  Fp(std::int64_t value, std::int64_t p);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const;
  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;  // throws on division by zero
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  bool operator==(const Fp& o) const;
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

 private:
  std::int64_t v_, p_;
  void check_same(const Fp& o) const;
};

// Image of an exact rational in F_p; throws DenominatorDivisibleByP if the
// reduced denominator vanishes mod p.
Fp rat_mod_p(const Rat& q, std::int64_t p);
Fp int_mod_p(const Int& n, std::int64_t p);

// ----------------------------------------------- binomial-basis polynomials

// P(m) = sum_i c[i] * C(m,i) with integer coefficients; the canonical zero is
// the single coefficient [0].  Trailing coefficients are nonzero otherwise.
class BinomPoly {
 public:
  BinomPoly() : c_{Int(0)} {}
  explicit BinomPoly(std::vector<Int> coeffs);

  // Newton fit through values at consecutive integers m0, m0+1, ...
  // With degree_cap >= 0 only the first degree_cap+1 samples define the
  // interpolant and the rest must agree (InconsistentSamples otherwise;
  // InsufficientSamples if fewer than degree_cap+1 samples are given).
  static BinomPoly fit(const std::vector<Int>& values, std::int64_t m0 = 0,
                       int degree_cap = -1);

  Int eval(const Int& m) const;
  BinomPoly finite_difference() const;  // m -> P(m) - P(m-1)

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  const std::vector<Int>& coeffs() const { return c_; }
  // Coefficient of m^degree in the monomial basis.
  Rat leading_monomial_coeff() const;

  bool operator==(const BinomPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<Int> c_;
  void normalize();
};

}  // namespace rinehart
