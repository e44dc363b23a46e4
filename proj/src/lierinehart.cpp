#include "rinehart/lierinehart.hpp"

#include <algorithm>
#include <random>

#include "rinehart/coeffs.hpp"
#include "rinehart/scalar.hpp"

namespace rinehart {

namespace {

// Deterministic claim order regardless of how the checks were interleaved.
void sort_claims(Report& r) {
  std::stable_sort(r.claims.begin(), r.claims.end(),
                   [](const Claim& a, const Claim& b) { return a.id < b.id; });
}

FpVec random_homogeneous(const std::vector<Parity>& par, Parity want,
                         std::int64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  FpVec v = fp_zero_vec(par.size(), p);
  for (std::size_t i = 0; i < par.size(); ++i)
    if (par[i] == want) v[i] = Fp(coeff(rng), p);
  return v;
}

Parity random_parity(std::mt19937_64& rng) {
  return (rng() & 1) ? Parity::odd : Parity::even;
}

}  // namespace

LRData::LRData(SuperAlgebra a, LieSuperalgebra l,
               std::vector<std::vector<FpVec>> action,
               std::vector<FpMat> anchor)
    : a_(std::move(a)),
      l_(std::move(l)),
      action_(std::move(action)),
      anchor_(std::move(anchor)) {
  if (a_.modulus() != l_.modulus())
    throw std::invalid_argument("LRData: moduli of A and L differ");
  if (!a_.has_unit() || !a_.flags().supercommutative ||
      !a_.flags().associative)
    throw std::invalid_argument(
        "LRData: base must be associative, supercommutative and unital");
  if (action_.size() != a_.dim())
    throw std::invalid_argument("LRData: one action row per basis of A");
  for (const auto& row : action_) {
    if (row.size() != l_.dim())
      throw std::invalid_argument("LRData: one action entry per basis of L");
    for (const auto& v : row)
      if (v.size() != l_.dim())
        throw std::invalid_argument("LRData: action values live in L");
  }
  if (anchor_.size() != l_.dim())
    throw std::invalid_argument("LRData: one anchor matrix per basis of L");
  for (const auto& m : anchor_)
    if (m.rows() != a_.dim() || m.cols() != a_.dim() ||
        m.modulus() != a_.modulus())
      throw std::invalid_argument("LRData: anchor matrices act on A");
}

FpVec LRData::act(const FpVec& a, const FpVec& x) const {
  if (a.size() != a_.dim() || x.size() != l_.dim())
    throw std::invalid_argument("LRData::act: size mismatch");
  FpVec out = l_.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      out = out + (a[i] * x[j]) * action_[i][j];
    }
  }
  return out;
}

FpMat LRData::anchor_of(const FpVec& x) const {
  if (x.size() != l_.dim())
    throw std::invalid_argument("LRData::anchor_of: size mismatch");
  FpMat m(a_.dim(), a_.dim(), a_.modulus());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    m = m + x[j] * anchor_[j];
  }
  return m;
}

FpMat Representation::act_a(const FpVec& a) const {
  if (a.size() != a_action.size() || a_action.empty())
    throw std::invalid_argument("Representation::act_a: size mismatch");
  FpMat m(dim(), dim(), a_action[0].modulus());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    m = m + a[i] * a_action[i];
  }
  return m;
}

FpMat Representation::phi_of(const FpVec& x) const {
  if (x.size() != phi.size() || phi.empty())
    throw std::invalid_argument("Representation::phi_of: size mismatch");
  FpMat m(dim(), dim(), phi[0].modulus());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    m = m + x[j] * phi[j];
  }
  return m;
}

// ----------------------------------------------------------- bundle axioms

Report check_lr(const LRData& data) {
  Report r;
  r.suite = "lie-rinehart";
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();

  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.dim() && ok; ++i)
      for (std::size_t j = 0; j < A.dim() && ok; ++j)
        for (std::size_t k = 0; k < L.dim() && ok; ++k) {
          FpVec lhs = data.act(A.product(i, j), L.basis_vector(k));
          FpVec rhs = data.act(A.basis_vector(i),
                               data.act(A.basis_vector(j), L.basis_vector(k)));
          if (!(lhs == rhs)) {
            ok = false;
            wit = "(" + A.name(i) + ", " + A.name(j) + ", " + L.name(k) + ")";
          }
        }
    r.add("action-associativity", "(a b) . x == a . (b . x) on basis triples",
          ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t k = 0; k < L.dim() && ok; ++k)
      if (!(data.act(A.unit_element(), L.basis_vector(k)) ==
            L.basis_vector(k))) {
        ok = false;
        wit = L.name(k);
      }
    r.add("action-unit", "1 . x == x on the basis of L", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.dim() && ok; ++i)
      for (std::size_t j = 0; j < L.dim() && ok; ++j) {
        const FpVec& v = data.action_constant(i, j);
        if (is_zero(v)) continue;
        auto pa = L.parity_of(v);
        if (!pa || *pa != A.parity(i) + L.parity(j)) {
          ok = false;
          wit = A.name(i) + " . " + L.name(j) + " = " + L.format(v);
        }
      }
    r.add("action-grading", "a . x is homogeneous of parity |a| + |x|", ok,
          wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t j = 0; j < L.dim() && ok; ++j)
      if (!respects_grading(data.anchor_constant(j), L.parity(j),
                            A.parities(), A.parities())) {
        ok = false;
        wit = L.name(j);
      }
    r.add("anchor-grading", "rho(x) shifts the grading of A by |x|", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t j = 0; j < L.dim() && ok; ++j)
      if (!is_derivation(A, data.anchor_constant(j), L.parity(j))) {
        ok = false;
        wit = L.name(j);
      }
    r.add("anchor-derivation", "rho(x) satisfies the graded Leibniz rule on A",
          ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < L.dim() && ok; ++i)
      for (std::size_t j = 0; j < L.dim() && ok; ++j) {
        FpMat lhs = data.anchor_of(L.bracket_basis(i, j));
        FpMat rhs = data.anchor_constant(i) * data.anchor_constant(j);
        FpMat swapped = data.anchor_constant(j) * data.anchor_constant(i);
        if (L.parity(i) == Parity::odd && L.parity(j) == Parity::odd)
          rhs = rhs + swapped;
        else
          rhs = rhs - swapped;
        if (lhs != rhs) {
          ok = false;
          wit = "(" + L.name(i) + ", " + L.name(j) + ")";
        }
      }
    r.add("anchor-lie-morphism",
          "rho([x, y]) is the graded commutator of rho(x) and rho(y)", ok,
          wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.dim() && ok; ++i)
      for (std::size_t j = 0; j < L.dim() && ok; ++j) {
        FpMat lhs = data.anchor_of(data.action_constant(i, j));
        FpMat rhs = A.left_mul_matrix(A.basis_vector(i)) *
                    data.anchor_constant(j);
        if (lhs != rhs) {
          ok = false;
          wit = A.name(i) + " . " + L.name(j);
        }
      }
    r.add("anchor-a-linear", "rho(a x) == a rho(x) as operators on A", ok,
          wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < L.dim() && ok; ++i)
      for (std::size_t j = 0; j < A.dim() && ok; ++j)
        for (std::size_t k = 0; k < L.dim() && ok; ++k) {
          FpVec lhs = L.bracket(
              L.basis_vector(i),
              data.act(A.basis_vector(j), L.basis_vector(k)));
          FpVec rhs = data.act(data.anchor_constant(i) * A.basis_vector(j),
                               L.basis_vector(k));
          FpVec graded = data.act(A.basis_vector(j), L.bracket_basis(i, k));
          if (L.parity(i) == Parity::odd && A.parity(j) == Parity::odd)
            rhs = rhs - graded;
          else
            rhs = rhs + graded;
          if (!(lhs == rhs)) {
            ok = false;
            wit = "(" + L.name(i) + ", " + A.name(j) + ", " + L.name(k) + ")";
          }
        }
    r.add("leibniz",
          "[x, a y] == (-1)^{|x||a|} a [x, y] + rho(x)(a) y on basis triples",
          ok, wit);
  }
  sort_claims(r);
  return r;
}

// ---------------------------------------------- p-th-power compatibility

namespace {

// Shared driver: run `ident` over all homogeneous basis pairs of the given
// parities, then over `samples` random homogeneous pairs.
template <typename F>
void run_case(Report& r, const LRData& data, Parity pa, Parity px,
              const std::string& id, const std::string& identity, F&& holds,
              int samples, std::mt19937_64& rng) {
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();
  bool ok = true;
  std::string wit;
  for (std::size_t i = 0; i < A.dim() && ok; ++i) {
    if (A.parity(i) != pa) continue;
    for (std::size_t j = 0; j < L.dim() && ok; ++j) {
      if (L.parity(j) != px) continue;
      if (!holds(A.basis_vector(i), L.basis_vector(j))) {
        ok = false;
        wit = "a = " + A.name(i) + ", x = " + L.name(j);
      }
    }
  }
  for (int n = 0; n < samples && ok; ++n) {
    FpVec a = random_homogeneous(A.parities(), pa, data.modulus(), rng);
    FpVec x = random_homogeneous(L.parities(), px, data.modulus(), rng);
    if (!holds(a, x)) {
      ok = false;
      wit = "a = " + A.format(a) + ", x = " + L.format(x);
    }
  }
  r.add(id, identity, ok, wit);
}

}  // namespace

Report check_restricted_lr(const LRData& data, int samples,
                           std::uint64_t seed) {
  Report r;
  r.suite = "restricted-lie-rinehart";
  r.seed = seed;
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();
  const std::int64_t p = data.modulus();

  if (!L.has_pmap()) {
    r.add("pmap-present", "L carries a p-map", false, "no p-map attached");
    sort_claims(r);
    return r;
  }
  r.add("pmap-present", "L carries a p-map", true);

  const auto lambda = lambda_vector(p).entries;
  const auto up = [](std::int64_t e) { return static_cast<std::uint64_t>(e); };
  std::mt19937_64 rng(seed);

  run_case(
      r, data, Parity::even, Parity::even, "case-even-even",
      "(a x)^[p] == a^p x^[p] + rho(a x)^{p-1}(a) x",
      [&](const FpVec& a, const FpVec& x) {
        FpVec ax = data.act(a, x);
        FpMat rho_ax = data.anchor_of(ax);
        FpVec rhs = data.act(A.power(a, up(p)), L.pmap_eval(x)) +
                    data.act(rho_ax.pow(up(p - 1)) * a, x);
        return L.pmap_eval(ax) == rhs;
      },
      samples, rng);

  run_case(
      r, data, Parity::even, Parity::odd, "case-even-odd",
      "(a x)^[2p] == a^{2p} x^[2p] + rho(a x)^{2p-1}(a) x"
      " + sum_i lambda_i rho(a x)^i(a) rho(a x)^{2p-2-i}(a) x^2",
      [&](const FpVec& a, const FpVec& x) {
        FpVec ax = data.act(a, x);
        FpMat rho_ax = data.anchor_of(ax);
        FpVec rhs = data.act(A.power(a, up(2 * p)), L.pmap_eval_2p(x)) +
                    data.act(rho_ax.pow(up(2 * p - 1)) * a, x);
        FpVec xsq = L.square(x);
        for (std::int64_t i = 0; i < p; ++i) {
          FpVec u = rho_ax.pow(up(i)) * a;
          FpVec v = rho_ax.pow(up(2 * p - 2 - i)) * a;
          rhs = rhs + data.act(lambda[static_cast<std::size_t>(i)] *
                                   A.mul(u, v),
                               xsq);
        }
        return L.pmap_eval_2p(ax) == rhs;
      },
      samples, rng);

  run_case(
      r, data, Parity::odd, Parity::even, "case-odd-even",
      "(a x)^[2p] == 0",
      [&](const FpVec& a, const FpVec& x) {
        return is_zero(L.pmap_eval_2p(data.act(a, x)));
      },
      samples, rng);

  run_case(
      r, data, Parity::odd, Parity::odd, "case-odd-odd",
      "(a x)^[p] == a (rho(x)(a))^{p-1} x",
      [&](const FpVec& a, const FpVec& x) {
        FpVec ax = data.act(a, x);
        FpVec rxa = data.anchor_of(x) * a;
        FpVec coeff = A.mul(a, A.power(rxa, up(p - 1)));
        return L.pmap_eval(ax) == data.act(coeff, x);
      },
      samples, rng);

  sort_claims(r);
  return r;
}

// ------------------------------------------------------- representations

namespace {

void validate_rep_shape(const LRData& data, const Representation& rep) {
  if (rep.parities.size() != rep.names.size())
    throw std::invalid_argument("Representation: one parity per basis name");
  if (rep.a_action.size() != data.base().dim())
    throw std::invalid_argument(
        "Representation: one A-action matrix per basis of A");
  if (rep.phi.size() != data.lie().dim())
    throw std::invalid_argument("Representation: one operator per basis of L");
  for (const auto& m : rep.a_action)
    if (m.rows() != rep.dim() || m.cols() != rep.dim() ||
        m.modulus() != data.modulus())
      throw std::invalid_argument("Representation: A-action matrix shape");
  for (const auto& m : rep.phi)
    if (m.rows() != rep.dim() || m.cols() != rep.dim() ||
        m.modulus() != data.modulus())
      throw std::invalid_argument("Representation: operator matrix shape");
}

// The three linear conditions shared by the module checkers: M is a graded
// A-module, phi is an A-linear graded Lie morphism, and the mixed rule
//   phi(x)(a m) == (-1)^{|x||a|} a phi(x)(m) + rho(x)(a) m
// holds; everything is matrix-exact on bases.
void linear_module_claims(Report& r, const LRData& data,
                          const Representation& rep) {
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.dim() && ok; ++i)
      if (!respects_grading(rep.a_action[i], A.parity(i), rep.parities,
                            rep.parities)) {
        ok = false;
        wit = A.name(i);
      }
    for (std::size_t i = 0; i < A.dim() && ok; ++i)
      for (std::size_t j = 0; j < A.dim() && ok; ++j)
        if (rep.act_a(A.product(i, j)) != rep.a_action[i] * rep.a_action[j]) {
          ok = false;
          wit = A.name(i) + " * " + A.name(j);
        }
    if (ok && rep.act_a(A.unit_element()) !=
                  FpMat::identity(rep.dim(), data.modulus())) {
      ok = false;
      wit = "unit";
    }
    r.add("module-structure",
          "M is a graded unital A-module under the declared action", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t j = 0; j < L.dim() && ok; ++j)
      if (!respects_grading(rep.phi[j], L.parity(j), rep.parities,
                            rep.parities)) {
        ok = false;
        wit = L.name(j);
      }
    for (std::size_t i = 0; i < A.dim() && ok; ++i)
      for (std::size_t j = 0; j < L.dim() && ok; ++j)
        if (rep.phi_of(data.action_constant(i, j)) !=
            rep.a_action[i] * rep.phi[j]) {
          ok = false;
          wit = "phi(" + A.name(i) + " . " + L.name(j) + ")";
        }
    for (std::size_t i = 0; i < L.dim() && ok; ++i)
      for (std::size_t j = 0; j < L.dim() && ok; ++j) {
        FpMat lhs = rep.phi_of(L.bracket_basis(i, j));
        FpMat rhs = rep.phi[i] * rep.phi[j];
        FpMat swapped = rep.phi[j] * rep.phi[i];
        if (L.parity(i) == Parity::odd && L.parity(j) == Parity::odd)
          rhs = rhs + swapped;
        else
          rhs = rhs - swapped;
        if (lhs != rhs) {
          ok = false;
          wit = "phi([" + L.name(i) + ", " + L.name(j) + "])";
        }
      }
    r.add("phi-structure",
          "phi is an A-linear graded Lie morphism into End(M)", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t j = 0; j < L.dim() && ok; ++j)
      for (std::size_t i = 0; i < A.dim() && ok; ++i) {
        FpMat lhs = rep.phi[j] * rep.a_action[i];
        FpMat rhs =
            rep.act_a(data.anchor_constant(j) * data.base().basis_vector(i));
        FpMat graded = rep.a_action[i] * rep.phi[j];
        if (L.parity(j) == Parity::odd && A.parity(i) == Parity::odd)
          rhs = rhs - graded;
        else
          rhs = rhs + graded;
        if (lhs != rhs) {
          ok = false;
          wit = "(" + L.name(j) + ", " + A.name(i) + ")";
        }
      }
    r.add("linear-rule",
          "phi(x)(a m) == (-1)^{|x||a|} a phi(x)(m) + rho(x)(a) m on bases",
          ok, wit);
  }
}

}  // namespace

Report check_representation(const LRData& data, const Representation& rep,
                            int samples, std::uint64_t seed) {
  validate_rep_shape(data, rep);
  Report r;
  r.suite = "representation";
  r.seed = seed;
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();
  const std::int64_t p = data.modulus();
  const auto up = [](std::int64_t e) { return static_cast<std::uint64_t>(e); };

  linear_module_claims(r, data, rep);

  if (!L.has_pmap()) {
    r.add_na("phi-restricted", "phi(x^[p]) == phi(x)^p on the even basis",
             "L carries no p-map");
    r.add_na("eq-power-even", "p-th-power module rule for even pairs",
             "L carries no p-map");
    r.add_na("eq-power-odd", "2p-th-power module rule for even/odd pairs",
             "L carries no p-map");
    sort_claims(r);
    return r;
  }

  {
    bool ok = true;
    std::string wit;
    for (std::size_t pos = 0; pos < L.even_indices().size() && ok; ++pos) {
      std::size_t j = L.even_indices()[pos];
      if (rep.phi_of(L.pmap().images[pos]) != rep.phi[j].pow(up(p))) {
        ok = false;
        wit = L.name(j);
      }
    }
    for (std::size_t j = 0; j < L.dim() && ok; ++j) {
      if (L.parity(j) != Parity::odd) continue;
      if (rep.phi_of(L.pmap_eval_2p(L.basis_vector(j))) !=
          rep.phi[j].pow(up(2 * p))) {
        ok = false;
        wit = L.name(j);
      }
    }
    r.add("phi-restricted",
          "phi(x^[p]) == phi(x)^p and phi(x^[2p]) == phi(x)^{2p} on the basis",
          ok, wit);
  }

  const auto lambda = lambda_vector(p).entries;
  std::mt19937_64 rng(seed);
  {
    bool ok = true;
    std::string wit;
    for (int n = 0; n < samples && ok; ++n) {
      FpVec a = random_homogeneous(A.parities(), Parity::even, p, rng);
      FpVec x = random_homogeneous(L.parities(), Parity::even, p, rng);
      FpVec ax = data.act(a, x);
      FpMat lhs = rep.phi_of(ax).pow(up(p - 1)) * rep.act_a(a);
      FpMat rhs = rep.act_a(A.power(a, up(p))) * rep.phi_of(x).pow(up(p - 1)) +
                  rep.act_a(data.anchor_of(ax).pow(up(p - 1)) * a);
      if (lhs != rhs) {
        ok = false;
        wit = "a = " + A.format(a) + ", x = " + L.format(x);
      }
    }
    r.add("eq-power-even",
          "phi(a x)^{p-1} a == a^p phi(x)^{p-1} + rho(a x)^{p-1}(a)"
          " on sampled even pairs",
          ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int n = 0; n < samples && ok; ++n) {
      FpVec a = random_homogeneous(A.parities(), Parity::even, p, rng);
      FpVec x = random_homogeneous(L.parities(), Parity::odd, p, rng);
      FpVec ax = data.act(a, x);
      FpMat rho_ax = data.anchor_of(ax);
      FpMat lhs = rep.phi_of(ax).pow(up(2 * p - 1)) * rep.act_a(a);
      FpMat rhs = rep.act_a(A.power(a, up(2 * p))) *
                      rep.phi_of(x).pow(up(2 * p - 1)) +
                  rep.act_a(rho_ax.pow(up(2 * p - 1)) * a);
      for (std::int64_t i = 0; i < p; ++i) {
        FpVec u = rho_ax.pow(up(i)) * a;
        FpVec v = rho_ax.pow(up(2 * p - 2 - i)) * a;
        rhs = rhs + rep.act_a(lambda[static_cast<std::size_t>(i)] *
                              A.mul(u, v)) *
                        rep.phi_of(x);
      }
      if (lhs != rhs) {
        ok = false;
        wit = "a = " + A.format(a) + ", x = " + L.format(x);
      }
    }
    r.add("eq-power-odd",
          "phi(a x)^{2p-1} a == a^{2p} phi(x)^{2p-1} + rho(a x)^{2p-1}(a)"
          " + sum_i lambda_i rho(a x)^i(a) rho(a x)^{2p-2-i}(a) phi(x)"
          " on sampled even/odd pairs",
          ok, wit);
  }
  sort_claims(r);
  return r;
}

Report check_hochschild_theorem(const LRData& data, const Representation& rep,
                                int samples, std::uint64_t seed) {
  validate_rep_shape(data, rep);
  Report r;
  r.suite = "hochschild";
  r.seed = seed;
  const SuperAlgebra& A = data.base();
  const std::int64_t p = data.modulus();
  const auto up = [](std::int64_t e) { return static_cast<std::uint64_t>(e); };
  const auto lambda = lambda_vector(p).entries;

  linear_module_claims(r, data, rep);

  std::mt19937_64 rng(seed);

  run_case(
      r, data, Parity::even, Parity::even, "operator-even-even",
      "phi(a x)^p == a^p phi(x)^p + rho(a x)^{p-1}(a) phi(x)",
      [&](const FpVec& a, const FpVec& x) {
        FpVec ax = data.act(a, x);
        FpMat rhs = rep.act_a(A.power(a, up(p))) * rep.phi_of(x).pow(up(p)) +
                    rep.act_a(data.anchor_of(ax).pow(up(p - 1)) * a) *
                        rep.phi_of(x);
        return rep.phi_of(ax).pow(up(p)) == rhs;
      },
      samples, rng);

  run_case(
      r, data, Parity::even, Parity::odd, "operator-even-odd",
      "phi(a x)^{2p} == a^{2p} phi(x)^{2p} + rho(a x)^{2p-1}(a) phi(x)"
      " + sum_i lambda_i rho(a x)^i(a) rho(a x)^{2p-2-i}(a) phi(x)^2",
      [&](const FpVec& a, const FpVec& x) {
        FpVec ax = data.act(a, x);
        FpMat rho_ax = data.anchor_of(ax);
        FpMat phix = rep.phi_of(x);
        FpMat rhs = rep.act_a(A.power(a, up(2 * p))) * phix.pow(up(2 * p)) +
                    rep.act_a(rho_ax.pow(up(2 * p - 1)) * a) * phix;
        for (std::int64_t i = 0; i < p; ++i) {
          FpVec u = rho_ax.pow(up(i)) * a;
          FpVec v = rho_ax.pow(up(2 * p - 2 - i)) * a;
          rhs = rhs + rep.act_a(lambda[static_cast<std::size_t>(i)] *
                                A.mul(u, v)) *
                          phix.pow(2);
        }
        return rep.phi_of(ax).pow(up(2 * p)) == rhs;
      },
      samples, rng);

  run_case(
      r, data, Parity::odd, Parity::even, "operator-odd-even",
      "phi(a x)^{2p} == 0",
      [&](const FpVec& a, const FpVec& x) {
        return rep.phi_of(data.act(a, x)).pow(up(2 * p)).is_zero();
      },
      samples, rng);

  run_case(
      r, data, Parity::odd, Parity::odd, "operator-odd-odd",
      "phi(a x)^p == a (rho(x)(a))^{p-1} phi(x)",
      [&](const FpVec& a, const FpVec& x) {
        FpVec ax = data.act(a, x);
        FpVec rxa = data.anchor_of(x) * a;
        FpMat rhs = rep.act_a(A.mul(a, A.power(rxa, up(p - 1)))) *
                    rep.phi_of(x);
        return rep.phi_of(ax).pow(up(p)) == rhs;
      },
      samples, rng);

  sort_claims(r);
  return r;
}

// --------------------------------------------------------- even sub-bundle

namespace {

FpVec select_coords(const FpVec& v, const std::vector<std::size_t>& keep) {
  FpVec out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(v[i]);
  return out;
}

FpMat select_block(const FpMat& m, const std::vector<std::size_t>& keep) {
  FpMat out(keep.size(), keep.size(), m.modulus());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c)
      out.at(r, c) = m.at(keep[r], keep[c]);
  return out;
}

std::vector<std::size_t> even_positions(const std::vector<Parity>& par) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < par.size(); ++i)
    if (par[i] == Parity::even) keep.push_back(i);
  return keep;
}

}  // namespace

LRData even_part_bundle(const LRData& data) {
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();
  const std::int64_t p = data.modulus();
  auto ai = even_positions(A.parities());
  auto li = even_positions(L.parities());

  std::vector<std::string> anames, lnames;
  for (auto i : ai) anames.push_back(A.name(i));
  for (auto j : li) lnames.push_back(L.name(j));
  std::vector<Parity> apar(ai.size(), Parity::even);
  std::vector<Parity> lpar(li.size(), Parity::even);

  std::vector<std::vector<FpVec>> products(
      ai.size(), std::vector<FpVec>(ai.size()));
  for (std::size_t u = 0; u < ai.size(); ++u)
    for (std::size_t v = 0; v < ai.size(); ++v)
      products[u][v] = select_coords(A.product(ai[u], ai[v]), ai);
  SuperAlgebra::Flags flags;
  flags.associative = true;
  flags.supercommutative = true;
  for (std::size_t u = 0; u < ai.size(); ++u)
    if (ai[u] == A.unit_index()) flags.unit = u;
  SuperAlgebra aev(anames, apar, products, p, flags);

  std::vector<std::vector<FpVec>> brackets(li.size(),
                                           std::vector<FpVec>(li.size()));
  for (std::size_t u = 0; u < li.size(); ++u)
    for (std::size_t v = 0; v < li.size(); ++v)
      brackets[u][v] = select_coords(L.bracket_basis(li[u], li[v]), li);
  LieSuperalgebra lev(lnames, lpar, brackets, p);
  if (L.has_pmap()) {
    // even_indices() of L is exactly li, in the same order.
    PMap pm;
    for (std::size_t pos = 0; pos < li.size(); ++pos)
      pm.images.push_back(select_coords(L.pmap().images[pos], li));
    lev.set_pmap(pm);
  }

  std::vector<std::vector<FpVec>> action(ai.size(),
                                         std::vector<FpVec>(li.size()));
  for (std::size_t u = 0; u < ai.size(); ++u)
    for (std::size_t v = 0; v < li.size(); ++v)
      action[u][v] = select_coords(data.action_constant(ai[u], li[v]), li);
  std::vector<FpMat> anchor;
  for (auto j : li) anchor.push_back(select_block(data.anchor_constant(j), ai));
  return LRData(std::move(aev), std::move(lev), std::move(action),
                std::move(anchor));
}

Representation even_part_representation(const LRData& data,
                                        const Representation& rep) {
  Representation out;
  out.names = rep.names;
  out.parities = rep.parities;
  for (auto i : even_positions(data.base().parities()))
    out.a_action.push_back(rep.a_action[i]);
  for (auto j : even_positions(data.lie().parities()))
    out.phi.push_back(rep.phi[j]);
  return out;
}

// ---------------------------------------------------------- semidirect

FpVec SemidirectResult::embed_lie(const FpVec& x) const {
  FpVec out = x;
  out.resize(lie_dim + module_dim, Fp(0, algebra.modulus()));
  return out;
}

FpVec SemidirectResult::embed_module(const FpVec& v) const {
  FpVec out = fp_zero_vec(lie_dim + module_dim, algebra.modulus());
  for (std::size_t j = 0; j < v.size(); ++j) out[lie_dim + j] = v[j];
  return out;
}

SemidirectResult build_semidirect(const LRData& data,
                                  const Representation& rep, int samples,
                                  std::uint64_t seed) {
  validate_rep_shape(data, rep);
  const SuperAlgebra& A = data.base();
  const LieSuperalgebra& L = data.lie();
  const std::int64_t p = data.modulus();
  const auto up = [](std::int64_t e) { return static_cast<std::uint64_t>(e); };
  if (!L.has_pmap())
    throw std::invalid_argument("build_semidirect: L must carry a p-map");

  const std::size_t nl = L.dim(), nv = rep.dim(), n = nl + nv;

  std::vector<std::string> names = L.names();
  for (std::string nm : rep.names) {
    while (std::find(names.begin(), names.end(), nm) != names.end())
      nm += "'";
    names.push_back(nm);
  }
  std::vector<Parity> parities = L.parities();
  parities.insert(parities.end(), rep.parities.begin(), rep.parities.end());

  auto embed_l = [&](const FpVec& x) {
    FpVec out = x;
    out.resize(n, Fp(0, p));
    return out;
  };
  auto embed_v = [&](const FpVec& v) {
    FpVec out = fp_zero_vec(n, p);
    for (std::size_t j = 0; j < v.size(); ++j) out[nl + j] = v[j];
    return out;
  };

  std::vector<std::vector<FpVec>> brackets(n, std::vector<FpVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < nl && j < nl)
        brackets[i][j] = embed_l(L.bracket_basis(i, j));
      else if (i < nl && j >= nl)
        brackets[i][j] = embed_v(rep.phi[i].column(j - nl));
      else if (i >= nl && j < nl) {
        FpVec img = embed_v(rep.phi[j].column(i - nl));
        bool both_odd = parities[i] == Parity::odd &&
                        parities[j] == Parity::odd;
        brackets[i][j] = both_odd ? img : Fp(-1, p) * img;
      } else
        brackets[i][j] = fp_zero_vec(n, p);
    }
  LieSuperalgebra prod(names, parities, brackets, p);

  PMap pm;
  std::size_t pos_l = 0;
  for (auto idx : prod.even_indices()) {
    if (idx < nl)
      pm.images.push_back(embed_l(L.pmap().images[pos_l++]));
    else
      pm.images.push_back(prod.zero());
  }
  prod.set_pmap(pm);

  Report r;
  r.suite = "semidirect";
  r.seed = seed;

  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < nl && ok; ++i)
      for (std::size_t j = 0; j < nv && ok; ++j) {
        FpVec lhs = prod.bracket(embed_l(L.basis_vector(i)),
                                 embed_v(fp_unit_vec(nv, j, p)));
        if (!(lhs == embed_v(rep.phi[i].column(j)))) {
          ok = false;
          wit = "(" + L.name(i) + ", " + rep.names[j] + ")";
        }
      }
    r.add("bracket-pairing", "[(x, 0), (0, w)] == (0, phi(x)(w)) on bases",
          ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < nl && ok; ++i) {
      if (L.parity(i) != Parity::even) continue;
      for (std::size_t j = 0; j < nv && ok; ++j) {
        if (rep.parities[j] != Parity::even) continue;
        FpVec arg = embed_l(L.basis_vector(i)) +
                    embed_v(fp_unit_vec(nv, j, p));
        std::size_t pos = 0;
        while (L.even_indices()[pos] != i) ++pos;
        FpVec want = embed_l(L.pmap().images[pos]) +
                     embed_v(rep.phi[i].pow(up(p - 1)).column(j));
        if (!(prod.pmap_eval(arg) == want)) {
          ok = false;
          wit = "(" + L.name(i) + ", " + rep.names[j] + ")";
        }
      }
    }
    r.add("basis-p-map",
          "(e + v)^[p] == e^[p] + phi(e)^{p-1}(v) on even basis pairs", ok,
          wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t pos = 0; pos < prod.even_indices().size() && ok; ++pos) {
      std::size_t idx = prod.even_indices()[pos];
      if (prod.ad(prod.pmap().images[pos]) !=
          prod.ad(prod.basis_vector(idx)).pow(up(p))) {
        ok = false;
        wit = prod.name(idx);
      }
    }
    r.add("jacobson-precondition",
          "ad(e^[p]) == ad(e)^p on the even product basis", ok, wit);
  }

  std::mt19937_64 rng(seed);
  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < samples && ok; ++t) {
      FpVec xv = random_homogeneous(parities, Parity::even, p, rng);
      FpVec yw = random_homogeneous(parities, random_parity(rng), p, rng);
      FpVec x(xv.begin(), xv.begin() + nl), v(xv.begin() + nl, xv.end());
      FpVec y(yw.begin(), yw.begin() + nl), w(yw.begin() + nl, yw.end());
      FpVec lhs = prod.ad(xv).pow(up(p)) * yw;
      FpMat phix = rep.phi_of(x);
      FpVec rhs = embed_l(L.ad(x).pow(up(p)) * y) +
                  embed_v(phix.pow(up(p)) * w -
                          rep.phi_of(y) * (phix.pow(up(p - 1)) * v));
      if (!(lhs == rhs)) {
        ok = false;
        wit = "x + v = " + prod.format(xv) + ", y + w = " + prod.format(yw);
      }
    }
    r.add("p-power-operator",
          "ad^p_{x+v}(y+w) == ad_x^p(y) + phi(x)^p(w) - phi(y) phi(x)^{p-1}(v)"
          " on sampled pairs",
          ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < samples && ok; ++t) {
      FpVec x = random_homogeneous(L.parities(), Parity::even, p, rng);
      FpVec y = random_homogeneous(L.parities(), random_parity(rng), p, rng);
      FpMat phix = rep.phi_of(x);
      FpMat phiy = rep.phi_of(y);
      for (std::int64_t nn = 0; nn <= p && ok; ++nn) {
        FpVec img = y;
        for (std::int64_t s = 0; s < nn; ++s) img = L.bracket(x, img);
        FpMat lhs = rep.phi_of(img);
        FpMat rhs(rep.dim(), rep.dim(), p);
        for (std::int64_t k = 0; k <= nn; ++k) {
          Fp c = int_mod_p(binom(nn, k), p);
          if (k % 2 == 1) c = -c;
          rhs = rhs + c * (phix.pow(up(nn - k)) * phiy * phix.pow(up(k)));
        }
        if (lhs != rhs) {
          ok = false;
          wit = "n = " + std::to_string(nn) + ", x = " + L.format(x) +
                ", y = " + L.format(y);
        }
      }
    }
    r.add("iterated-bracket-images",
          "phi(ad_x^n(y)) == sum_k (-1)^k C(n,k) phi(x)^{n-k} phi(y) phi(x)^k"
          " for n <= p on sampled pairs",
          ok, wit);
  }

  // Extended bundle: diagonal A-action, anchor zero on the module block.
  std::vector<std::vector<FpVec>> ext_action(A.dim(), std::vector<FpVec>(n));
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < nl; ++j)
      ext_action[i][j] = embed_l(data.action_constant(i, j));
    for (std::size_t j = 0; j < nv; ++j)
      ext_action[i][nl + j] = embed_v(rep.a_action[i].column(j));
  }
  std::vector<FpMat> ext_anchor;
  for (std::size_t j = 0; j < nl; ++j)
    ext_anchor.push_back(data.anchor_constant(j));
  for (std::size_t j = 0; j < nv; ++j)
    ext_anchor.push_back(FpMat(A.dim(), A.dim(), p));
  LRData extended(A, prod, std::move(ext_action), std::move(ext_anchor));

  {
    bool ok = true;
    std::string wit;
    for (std::size_t j = 0; j < n && ok; ++j) {
      FpMat want = j < nl ? data.anchor_constant(j) : FpMat(A.dim(), A.dim(), p);
      if (extended.anchor_constant(j) != want) {
        ok = false;
        wit = prod.name(j);
      }
    }
    r.add("anchor-extension", "rho~(x + v) == rho(x) on the product basis",
          ok, wit);
  }

  auto z = center(prod);
  if (z.empty()) {
    r.add("center-trivial", "the center of the product algebra is zero",
          true);
    Report sub = check_restricted_lr(extended, samples, seed);
    for (auto& c : sub.claims) {
      c.id = "restricted-lr/" + c.id;
      r.claims.push_back(std::move(c));
    }
  } else {
    r.add_na("center-trivial", "the center of the product algebra is zero",
             "center contains " + prod.format(z[0]));
    r.add_na("restricted-lr/verdict",
             "compatibility identities on the extended bundle",
             "not applicable -- center nontrivial");
  }
  sort_claims(r);

  SemidirectResult out{std::move(prod), std::move(z), std::move(extended),
                       std::move(r), nl, nv};
  return out;
}

// ------------------------------------------------------------- builtins

BuiltinBundle derivations_bundle(const SuperAlgebra& a) {
  const std::int64_t p = a.modulus();
  auto ds = derivation_space(a);
  auto l = lie_from_derivations(a, ds);
  auto maps = ds.all();

  std::vector<FpVec> span;
  for (const auto& gm : maps) span.push_back(gm.matrix.flatten());

  std::vector<std::vector<FpVec>> action(
      a.dim(), std::vector<FpVec>(l.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    FpMat lm = a.left_mul_matrix(a.basis_vector(i));
    for (std::size_t j = 0; j < l.dim(); ++j) {
      auto c = coordinates_in_span(span, (lm * maps[j].matrix).flatten(), p);
      if (!c)
        throw std::logic_error(
            "derivations_bundle: a.D left the derivation span");
      action[i][j] = *c;
    }
  }
  std::vector<FpMat> anchor;
  for (const auto& gm : maps) anchor.push_back(gm.matrix);

  Representation rep;
  rep.names = a.names();
  rep.parities = a.parities();
  for (std::size_t i = 0; i < a.dim(); ++i)
    rep.a_action.push_back(a.left_mul_matrix(a.basis_vector(i)));
  rep.phi = anchor;

  LRData data(a, std::move(l), std::move(action), std::move(anchor));
  return {std::move(data), std::move(rep)};
}

BuiltinBundle witt_bundle(int n, std::int64_t p) {
  return derivations_bundle(build_grassmann(n, p));
}

namespace {

// The shared 1|1-dimensional base: e1 the unit, e2 odd with e2^2 = 0.
SuperAlgebra dual_numbers_odd(std::int64_t p) {
  std::vector<std::vector<FpVec>> products(2, std::vector<FpVec>(2));
  products[0][0] = fp_unit_vec(2, 0, p);
  products[0][1] = fp_unit_vec(2, 1, p);
  products[1][0] = fp_unit_vec(2, 1, p);
  products[1][1] = fp_zero_vec(2, p);
  SuperAlgebra::Flags flags;
  flags.associative = true;
  flags.supercommutative = true;
  flags.unit = 0;
  return SuperAlgebra({"e1", "e2"}, {Parity::even, Parity::odd}, products, p,
                      flags);
}

}  // namespace

BuiltinBundle example_bundle_2_1(std::int64_t p, std::int64_t alpha,
                                 std::int64_t beta, std::int64_t gamma) {
  SuperAlgebra a = dual_numbers_odd(p);

  std::vector<std::vector<FpVec>> br(3, std::vector<FpVec>(3,
                                                           fp_zero_vec(3, p)));
  auto e = [&](std::size_t i) { return fp_unit_vec(3, i, p); };
  br[0][2] = e(2);
  br[2][0] = Fp(-1, p) * e(2);
  br[1][2] = Fp(-1, p) * e(2);
  br[2][1] = e(2);
  LieSuperalgebra l({"x1", "x2", "x3"},
                    {Parity::even, Parity::even, Parity::odd}, br, p);
  FpVec fam = Fp(alpha, p) * (e(0) + e(1));
  l.set_pmap({{e(0) + fam, Fp(-1, p) * e(0) + fam}});

  std::vector<std::vector<FpVec>> action(2, std::vector<FpVec>(3));
  for (std::size_t j = 0; j < 3; ++j) action[0][j] = e(j);
  action[1][0] = Fp(beta, p) * e(2);
  action[1][1] = Fp(gamma, p) * e(2);
  action[1][2] = fp_zero_vec(3, p);

  // rho(x1)(e2) = e2, rho(x2)(e2) = -e2, rho(x3) = 0, everything kills e1.
  std::vector<FpMat> anchor(3, FpMat(2, 2, p));
  anchor[0].at(1, 1) = Fp(1, p);
  anchor[1].at(1, 1) = Fp(-1, p);

  Representation rep;
  rep.names = a.names();
  rep.parities = a.parities();
  for (std::size_t i = 0; i < 2; ++i)
    rep.a_action.push_back(a.left_mul_matrix(a.basis_vector(i)));
  rep.phi = anchor;

  LRData data(std::move(a), std::move(l), std::move(action),
              std::move(anchor));
  return {std::move(data), std::move(rep)};
}

BuiltinBundle example_bundle_2_2(std::int64_t p, std::int64_t alpha,
                                 std::int64_t beta) {
  SuperAlgebra a = dual_numbers_odd(p);

  std::vector<std::vector<FpVec>> br(4, std::vector<FpVec>(4,
                                                           fp_zero_vec(4, p)));
  auto e = [&](std::size_t i) { return fp_unit_vec(4, i, p); };
  auto set = [&](std::size_t i, std::size_t j, const FpVec& v) {
    br[i][j] = v;
    br[j][i] = Fp(-1, p) * v;
  };
  set(0, 2, e(2));
  set(0, 3, e(3));
  set(1, 3, e(2));
  LieSuperalgebra l({"x1", "x2", "x3", "x4"},
                    {Parity::even, Parity::even, Parity::odd, Parity::odd},
                    br, p);
  l.set_pmap({{e(0), fp_zero_vec(4, p)}});

  std::vector<std::vector<FpVec>> action(2, std::vector<FpVec>(4));
  for (std::size_t j = 0; j < 4; ++j) action[0][j] = e(j);
  action[1][0] = Fp(alpha, p) * e(2);
  action[1][1] = Fp(beta, p) * e(2);
  action[1][2] = fp_zero_vec(4, p);
  action[1][3] = fp_zero_vec(4, p);

  std::vector<FpMat> anchor(4, FpMat(2, 2, p));
  anchor[0].at(1, 1) = Fp(1, p);

  Representation rep;
  rep.names = a.names();
  rep.parities = a.parities();
  for (std::size_t i = 0; i < 2; ++i)
    rep.a_action.push_back(a.left_mul_matrix(a.basis_vector(i)));
  rep.phi = anchor;

  LRData data(std::move(a), std::move(l), std::move(action),
              std::move(anchor));
  return {std::move(data), std::move(rep)};
}

BuiltinBundle builtin_bundle(const std::string& name, std::int64_t p,
                             const std::map<std::string, std::int64_t>& params) {
  auto get = [&](const std::string& key, std::int64_t dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
  };
  if (name == "derivations" || name == "witt")
    return witt_bundle(static_cast<int>(get("n", 2)), p);
  if (name == "example-2-1")
    return example_bundle_2_1(p, get("alpha", 1), get("beta", 1),
                              get("gamma", 0));
  if (name == "example-2-2")
    return example_bundle_2_2(p, get("alpha", 1), get("beta", 1));
  throw UnknownExample("unknown builtin bundle: " + name);
}

// -------------------------------------------------------------- morphisms

Report check_lr_morphism(const LRData& src, const LRData& dst,
                         const FpMat& phi, const FpMat& psi) {
  const SuperAlgebra& As = src.base();
  const SuperAlgebra& Ad = dst.base();
  const LieSuperalgebra& Ls = src.lie();
  const LieSuperalgebra& Ld = dst.lie();
  if (src.modulus() != dst.modulus())
    throw std::invalid_argument("check_lr_morphism: moduli differ");
  if (phi.rows() != Ad.dim() || phi.cols() != As.dim() ||
      psi.rows() != Ld.dim() || psi.cols() != Ls.dim())
    throw std::invalid_argument("check_lr_morphism: matrix shapes");

  Report r;
  r.suite = "lr-morphism";
  {
    bool ok_phi = respects_grading(phi, Parity::even, As.parities(),
                                   Ad.parities());
    bool ok_psi = respects_grading(psi, Parity::even, Ls.parities(),
                                   Ld.parities());
    if (!ok_phi || !ok_psi) {
      r.add("parity-preserving", "phi and psi are even maps", false,
            !ok_phi ? "phi mixes parities" : "psi mixes parities");
      sort_claims(r);
      return r;
    }
    r.add("parity-preserving", "phi and psi are even maps", true);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < As.dim() && ok; ++i)
      for (std::size_t j = 0; j < As.dim() && ok; ++j) {
        FpVec lhs = phi * As.product(i, j);
        FpVec rhs = Ad.mul(phi * As.basis_vector(i), phi * As.basis_vector(j));
        if (!(lhs == rhs)) {
          ok = false;
          wit = As.name(i) + " * " + As.name(j);
        }
      }
    if (ok && !(phi * As.unit_element() == Ad.unit_element())) {
      ok = false;
      wit = "unit";
    }
    r.add("algebra-morphism",
          "phi is a unital morphism of associative superalgebras", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < Ls.dim() && ok; ++i)
      for (std::size_t j = 0; j < Ls.dim() && ok; ++j) {
        FpVec lhs = psi * Ls.bracket_basis(i, j);
        FpVec rhs = Ld.bracket(psi * Ls.basis_vector(i),
                               psi * Ls.basis_vector(j));
        if (!(lhs == rhs)) {
          ok = false;
          wit = "[" + Ls.name(i) + ", " + Ls.name(j) + "]";
        }
      }
    r.add("lie-morphism", "psi([x, y]) == [psi(x), psi(y)]", ok, wit);
  }
  if (Ls.has_pmap() && Ld.has_pmap()) {
    bool ok = true;
    std::string wit;
    for (std::size_t pos = 0; pos < Ls.even_indices().size() && ok; ++pos) {
      std::size_t j = Ls.even_indices()[pos];
      FpVec lhs = psi * Ls.pmap().images[pos];
      FpVec rhs = Ld.pmap_eval(psi * Ls.basis_vector(j));
      if (!(lhs == rhs)) {
        ok = false;
        wit = Ls.name(j);
      }
    }
    r.add("restricted-morphism", "psi(x^[p]) == psi(x)^[p] on the even basis",
          ok, wit);
  } else {
    r.add_na("restricted-morphism",
             "psi(x^[p]) == psi(x)^[p] on the even basis",
             "a p-map is missing on one side");
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < As.dim() && ok; ++i)
      for (std::size_t j = 0; j < Ls.dim() && ok; ++j) {
        FpVec lhs = psi * src.action_constant(i, j);
        FpVec rhs = dst.act(phi * As.basis_vector(i),
                            psi * Ls.basis_vector(j));
        if (!(lhs == rhs)) {
          ok = false;
          wit = As.name(i) + " . " + Ls.name(j);
        }
      }
    r.add("action-compat", "psi(a x) == phi(a) psi(x)", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < As.dim() && ok; ++i)
      for (std::size_t j = 0; j < Ls.dim() && ok; ++j) {
        FpVec lhs = phi * (src.anchor_constant(j) * As.basis_vector(i));
        FpVec rhs = dst.anchor_of(psi * Ls.basis_vector(j)) *
                    (phi * As.basis_vector(i));
        if (!(lhs == rhs)) {
          ok = false;
          wit = "rho(" + Ls.name(j) + ")(" + As.name(i) + ")";
        }
      }
    r.add("anchor-compat",
          "phi(rho(x)(a)) == rho'(psi(x))(phi(a)) on basis pairs", ok, wit);
  }
  sort_claims(r);
  return r;
}

}  // namespace rinehart
