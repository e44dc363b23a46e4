#pragma once
// Supercommutative polynomial ring on variables x0, x1, x2, ...
//
// A parity case fixes |x0| and |delta|; the induced grading is
// |x_i| = |x0| + i*|delta| (mod 2).  Even variables commute, odd variables
// anticommute and square to zero.  Monomials are kept with strictly
// increasing variable indices and Koszul signs normalized into coefficients.
// delta is the shift derivation x_i -> x_{i+1}, of parity |delta|.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rinehart/scalar.hpp"

namespace rinehart {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline Parity parity_of(int n) { return Parity(((n % 2) + 2) % 2); }

struct ParityCase {
  Parity x0 = Parity::even;
  Parity delta = Parity::odd;

  Parity var(int i) const {
    return Parity((static_cast<int>(x0) + i * static_cast<int>(delta)) % 2);
  }
  bool operator==(const ParityCase&) const = default;

  std::string name() const;                        // "even_odd" etc.
  static ParityCase parse(const std::string& s);   // accepts "even/odd", "even_odd"
};

inline constexpr ParityCase kEvenEven{Parity::even, Parity::even};
inline constexpr ParityCase kEvenOdd{Parity::even, Parity::odd};
inline constexpr ParityCase kOddEven{Parity::odd, Parity::even};
inline constexpr ParityCase kOddOdd{Parity::odd, Parity::odd};
inline const ParityCase kAllParityCases[4] = {kEvenEven, kEvenOdd, kOddEven,
                                              kOddOdd};

struct Monomial {
  // (variable index, exponent) with strictly increasing indices, exponents >= 1
  std::vector<std::pair<int, int>> factors;

  int degree() const {
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
  }
  int weight() const {  // sum of variable indices with multiplicity
    int w = 0;
    for (auto& [v, e] : factors) w += v * e;
    return w;
  }
  Parity parity(const ParityCase& pc) const {
    int s = 0;
    for (auto& [v, e] : factors) s += e * static_cast<int>(pc.var(v));
    return parity_of(s);
  }
  auto operator<=>(const Monomial&) const = default;
};

std::string to_string(const Monomial& m);

// Sorts an arbitrary factor list, merging repeated variables and tracking the
// Koszul sign.  Returns sign 0 when an odd variable ends up squared.
std::pair<int, Monomial> canonicalize(std::vector<std::pair<int, int>> factors,
                                      const ParityCase& pc);

template <class C>
class BasicSuperPoly {
 public:
  using Coeff = C;
  std::map<Monomial, C> terms;

  BasicSuperPoly() = default;

  static BasicSuperPoly zero() { return {}; }
  static BasicSuperPoly constant(const C& c) {
    BasicSuperPoly f;
    f.add_term(Monomial{}, c);
    return f;
  }
  static BasicSuperPoly variable(int i) {
    BasicSuperPoly f;
    f.add_term(Monomial{{{i, 1}}}, C(1));
    return f;
  }
  static BasicSuperPoly monomial(Monomial m, const C& c) {
    BasicSuperPoly f;
    f.add_term(std::move(m), c);
    return f;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(Monomial m, const C& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  C coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? C(0) : it->second;
  }

  BasicSuperPoly& operator+=(const BasicSuperPoly& o) {
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  BasicSuperPoly& operator-=(const BasicSuperPoly& o) {
    for (auto& [m, c] : o.terms) add_term(m, C(-c));
    return *this;
  }
  friend BasicSuperPoly operator+(BasicSuperPoly a, const BasicSuperPoly& b) {
    a += b;
    return a;
  }
  friend BasicSuperPoly operator-(BasicSuperPoly a, const BasicSuperPoly& b) {
    a -= b;
    return a;
  }
  BasicSuperPoly operator-() const {
    BasicSuperPoly r;
    for (auto& [m, c] : terms) r.terms.emplace(m, C(-c));
    return r;
  }
  friend BasicSuperPoly operator*(const C& s, BasicSuperPoly f) {
    if (s == 0) return {};
    for (auto& [m, c] : f.terms) c *= s;
    return f;
  }
  bool operator==(const BasicSuperPoly& o) const { return terms == o.terms; }

  // Every nonzero term has the same parity; empty polynomial counts as
  // homogeneous of either parity.
  std::optional<Parity> homogeneous_parity(const ParityCase& pc) const {
    std::optional<Parity> par;
    for (auto& [m, c] : terms) {
      Parity q = m.parity(pc);
      if (par && *par != q) return std::nullopt;
      par = q;
    }
    return is_zero() ? std::optional<Parity>(Parity::even) : par;
  }
};

using SuperPolyZ = BasicSuperPoly<Int>;
using SuperPolyQ = BasicSuperPoly<Rat>;

template <class C>
BasicSuperPoly<C> mul(const BasicSuperPoly<C>& a, const BasicSuperPoly<C>& b,
                      const ParityCase& pc) {
  BasicSuperPoly<C> r;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) {
      std::vector<std::pair<int, int>> raw = ma.factors;
      raw.insert(raw.end(), mb.factors.begin(), mb.factors.end());
      auto [sign, m] = canonicalize(std::move(raw), pc);
      if (sign != 0) r.add_term(std::move(m), C(sign) * ca * cb);
    }
  return r;
}

// Graded Leibniz shift derivation: delta(x_i) = x_{i+1}, |delta| = pc.delta.
template <class C>
BasicSuperPoly<C> delta(const BasicSuperPoly<C>& f, const ParityCase& pc) {
  BasicSuperPoly<C> r;
  const bool delta_odd = pc.delta == Parity::odd;
  for (auto& [m, c] : f.terms) {
    int prefix = 0;  // parity of the factors to the left of the current block
    for (std::size_t u = 0; u < m.factors.size(); ++u) {
      auto [v, e] = m.factors[u];
      std::vector<std::pair<int, int>> raw;
      raw.reserve(m.factors.size() + 1);
      raw.insert(raw.end(), m.factors.begin(), m.factors.begin() + u);
      raw.emplace_back(v, e - 1);
      raw.emplace_back(v + 1, 1);
      raw.insert(raw.end(), m.factors.begin() + u + 1, m.factors.end());
      auto [sign, dm] = canonicalize(std::move(raw), pc);
      if (sign != 0) {
        if (delta_odd && prefix % 2 != 0) sign = -sign;
        r.add_term(std::move(dm), C(sign) * C(e) * c);
      }
      prefix += e * static_cast<int>(pc.var(v));
    }
  }
  return r;
}

template <class C>
BasicSuperPoly<C> pow(const BasicSuperPoly<C>& f, int e, const ParityCase& pc) {
  auto r = BasicSuperPoly<C>::constant(C(1));
  for (int t = 0; t < e; ++t) r = mul(r, f, pc);
  return r;
}

inline SuperPolyQ to_rational(const SuperPolyZ& f) {
  SuperPolyQ r;
  for (auto& [m, c] : f.terms) r.terms.emplace(m, Rat(c));
  return r;
}

// True when every coefficient is divisible by p.
inline bool divisible_by(const SuperPolyZ& f, std::int64_t p) {
  for (auto& [m, c] : f.terms)
    if (c % p != 0) return false;
  return true;
}

std::string to_string(const SuperPolyZ& f);
std::string to_string(const SuperPolyQ& f);

// Parses the textual form produced by to_string ("2*x0^3*x1 - 1/2*x2").
// Monomials are canonicalized through the parity case, so input factor order
// may be arbitrary and odd squares collapse to zero.
SuperPolyQ parse_poly(const std::string& text, const ParityCase& pc);

// Evaluation of a polynomial under x_i -> model.var(i) into an associative
// model.  Model provides: Elem, zero(), one(), var(int), mul, add, scale.
template <class C, class Model>
typename Model::Elem eval_hom(const BasicSuperPoly<C>& f, const Model& model) {
  auto acc = model.zero();
  for (auto& [m, c] : f.terms) {
    auto prod = model.one();
    for (auto& [v, e] : m.factors)
      for (int t = 0; t < e; ++t) prod = model.mul(prod, model.var(v));
    acc = model.add(acc, model.scale(prod, c));
  }
  return acc;
}

}  // namespace rinehart
