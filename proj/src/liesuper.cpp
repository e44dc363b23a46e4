#include "rinehart/liesuper.hpp"

#include <random>
#include <stdexcept>

namespace rinehart {

namespace {

bool both_odd(Parity a, Parity b) {
  return a == Parity::odd && b == Parity::odd;
}

FpVec negate(FpVec v) {
  for (auto& c : v) c = -c;
  return v;
}

}  // namespace

LieSuperalgebra::LieSuperalgebra(std::vector<std::string> names,
                                 std::vector<Parity> parities,
                                 std::vector<std::vector<FpVec>> brackets,
                                 std::int64_t p)
    : names_(std::move(names)),
      parities_(std::move(parities)),
      brackets_(std::move(brackets)),
      p_(p) {
  require_odd_prime(p_);
  const std::size_t d = names_.size();
  if (parities_.size() != d || brackets_.size() != d)
    throw std::invalid_argument("LieSuperalgebra: table size mismatch");
  for (const auto& row : brackets_) {
    if (row.size() != d)
      throw std::invalid_argument("LieSuperalgebra: table size mismatch");
    for (const auto& entry : row)
      if (entry.size() != d)
        throw std::invalid_argument("LieSuperalgebra: table size mismatch");
  }
  for (std::size_t i = 0; i < d; ++i)
    if (parities_[i] == Parity::even) even_.push_back(i);
  validate();
}

void LieSuperalgebra::validate() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Parity expect = parities_[i] + parities_[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!brackets_[i][j][k].is_zero() && parities_[k] != expect)
          throw FlagViolation("parity additivity fails at [" + names_[i] +
                              "," + names_[j] + "] -> " + names_[k]);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      FpVec rhs = brackets_[j][i];
      if (!both_odd(parities_[i], parities_[j])) rhs = negate(rhs);
      if (!(brackets_[i][j] == rhs))
        throw FlagViolation("super skew-symmetry fails at [" + names_[i] +
                            "," + names_[j] + "]");
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // (-1)^{|i||k|} [i,[j,k]] + cyclic.
        FpVec sum = fp_zero_vec(d, p_);
        auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
          FpVec t = bracket(basis_vector(a), brackets_[b][c]);
          if (both_odd(parities_[a], parities_[c])) t = negate(t);
          return t;
        };
        sum = sum + term(i, j, k) + term(j, k, i) + term(k, i, j);
        if (!is_zero(sum))
          throw FlagViolation("super Jacobi fails at (" + names_[i] + "," +
                              names_[j] + "," + names_[k] + ")");
      }
  for (std::size_t i = 0; i < d; ++i)
    if (parities_[i] == Parity::odd &&
        !is_zero(bracket(basis_vector(i), brackets_[i][i])))
      throw FlagViolation("[x,[x,x]] != 0 for odd " + names_[i]);
}

FpVec LieSuperalgebra::bracket(const FpVec& x, const FpVec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("bracket: size mismatch");
  FpVec r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      Fp c = x[i] * y[j];
      const FpVec& br = brackets_[i][j];
      for (std::size_t k = 0; k < dim(); ++k) r[k] += c * br[k];
    }
  }
  return r;
}

FpMat LieSuperalgebra::ad(const FpVec& x) const {
  std::vector<FpVec> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    cols.push_back(bracket(x, basis_vector(j)));
  return FpMat::from_columns(cols, p_, dim());
}

FpVec LieSuperalgebra::square(const FpVec& x) const {
  auto pa = parity_of(x);
  if (!is_zero(x) && (!pa || *pa != Parity::odd))
    throw std::invalid_argument("square: element is not odd");
  Fp half = Fp(2, p_).inverse();
  return half * bracket(x, x);
}

std::optional<Parity> LieSuperalgebra::parity_of(const FpVec& v) const {
  std::optional<Parity> seen;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!seen) {
      seen = parities_[i];
    } else if (*seen != parities_[i]) {
      return std::nullopt;
    }
  }
  return seen;
}

void LieSuperalgebra::set_pmap(PMap pm) {
  if (pm.images.size() != even_.size())
    throw std::invalid_argument("set_pmap: one image per even basis element");
  for (const auto& img : pm.images)
    if (img.size() != dim())
      throw std::invalid_argument("set_pmap: image size mismatch");
  pmap_ = std::move(pm);
}

FpVec LieSuperalgebra::pmap_eval(const FpVec& x) const {
  if (!has_pmap()) throw std::logic_error("pmap_eval: no p-map attached");
  auto pa = parity_of(x);
  if (!is_zero(x) && (!pa || *pa != Parity::even))
    throw std::invalid_argument("pmap_eval: element is not even");

  // Fold the basis terms from the right through the sum expansion.
  FpVec val = zero();
  FpVec tail = zero();
  bool have_tail = false;
  for (std::size_t pos = even_.size(); pos-- > 0;) {
    std::size_t j = even_[pos];
    if (x[j].is_zero()) continue;
    FpVec term = x[j] * basis_vector(j);
    FpVec term_val =
        x[j].pow(static_cast<std::uint64_t>(p_)) * pmap_->images[pos];
    if (!have_tail) {
      val = term_val;
      tail = term;
      have_tail = true;
      continue;
    }
    FpVec next = term_val + val;
    for (const auto& s : s_coefficients(*this, term, tail)) next = next + s;
    val = next;
    tail = term + tail;
  }
  return val;
}

FpVec LieSuperalgebra::pmap_eval_2p(const FpVec& x) const {
  return pmap_eval(square(x));
}

std::vector<FpVec> center(const LieSuperalgebra& l) {
  std::vector<FpVec> cols;
  for (std::size_t j = 0; j < l.dim(); ++j)
    cols.push_back(l.ad(l.basis_vector(j)).flatten());
  return nullspace(
      FpMat::from_columns(cols, l.modulus(), l.dim() * l.dim()));
}

std::vector<FpVec> s_coefficients(const LieSuperalgebra& l, const FpVec& x,
                                  const FpVec& y) {
  auto px = l.parity_of(x), py = l.parity_of(y);
  if ((!is_zero(x) && (!px || *px != Parity::even)) ||
      (!is_zero(y) && (!py || *py != Parity::even)))
    throw std::invalid_argument("s_coefficients: arguments must be even");
  const std::int64_t p = l.modulus();

  // Coefficients of ad_{lambda x + y}^{p-1}(x) by lambda-degree.
  std::vector<FpVec> poly(static_cast<std::size_t>(p), l.zero());
  poly[0] = x;
  for (std::int64_t step = 0; step < p - 1; ++step) {
    std::vector<FpVec> next(poly.size(), l.zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] = l.bracket(y, poly[d]);
      if (d > 0) next[d] = next[d] + l.bracket(x, poly[d - 1]);
    }
    poly = std::move(next);
  }
  if (!is_zero(poly.back()))
    throw std::logic_error("s_coefficients: lambda^(p-1) term should vanish");

  std::vector<FpVec> s;
  FpVec total = l.zero();
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    FpVec si = Fp(i, p).inverse() * poly[static_cast<std::size_t>(i - 1)];
    total = total + si;
    s.push_back(std::move(si));
  }

  // Independent route: the nested-bracket closed form for the sum, over all
  // words in {x,y} ending in (y, x), weighted by 1/#occurrences-of-x.
  FpVec nested = l.zero();
  const int free_slots = static_cast<int>(p - 2);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_slots);
       ++mask) {
    FpVec v = l.bracket(y, x);
    int sharp = 1;
    for (int slot = free_slots - 1; slot >= 0; --slot) {
      bool use_x = (mask >> slot) & 1;
      if (use_x) ++sharp;
      v = l.bracket(use_x ? x : y, v);
    }
    nested = nested + Fp(sharp, p).inverse() * v;
  }
  if (!(total == nested))
    throw std::logic_error(
        "s_coefficients: expansion disagrees with the nested-bracket form");
  return s;
}

JacobsonFamily jacobson_solve(const LieSuperalgebra& l) {
  const std::int64_t p = l.modulus();
  std::vector<FpVec> cols;
  for (std::size_t pos = 0; pos < l.even_indices().size(); ++pos)
    cols.push_back(l.ad(l.basis_vector(l.even_indices()[pos])).flatten());
  FpMat system = FpMat::from_columns(cols, p, l.dim() * l.dim());

  JacobsonFamily fam;
  for (std::size_t pos = 0; pos < l.even_indices().size(); ++pos) {
    std::size_t j = l.even_indices()[pos];
    FpVec target =
        l.ad(l.basis_vector(j)).pow(static_cast<std::uint64_t>(p)).flatten();
    auto coords = solve(system, target);
    if (!coords)
      throw NotRestrictable("no f with ad_f = ad(" + l.name(j) + ")^p");
    FpVec image = l.zero();
    for (std::size_t k = 0; k < coords->size(); ++k)
      image = image + (*coords)[k] * l.basis_vector(l.even_indices()[k]);
    fam.particular.images.push_back(std::move(image));
  }
  for (const auto& c : nullspace(system)) {
    FpVec z = l.zero();
    for (std::size_t k = 0; k < c.size(); ++k)
      z = z + c[k] * l.basis_vector(l.even_indices()[k]);
    fam.center_even.push_back(std::move(z));
  }
  return fam;
}

namespace {

FpVec random_homogeneous_vec(const LieSuperalgebra& l, Parity pa,
                             std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, l.modulus() - 1);
  FpVec v = l.zero();
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.parity(i) == pa) v[i] = Fp(coeff(rng), l.modulus());
  return v;
}

}  // namespace

Report check_restricted(const LieSuperalgebra& l, int samples,
                        std::uint64_t seed) {
  Report r;
  r.suite = "restricted-lie";
  r.seed = seed;
  if (!l.has_pmap()) {
    r.add("pmap-present", "a p-map is attached to the even basis", false,
          "no p-map");
    return r;
  }
  r.add("pmap-present", "a p-map is attached to the even basis", true);

  {
    bool ok = true;
    std::string witness;
    for (std::size_t pos = 0; pos < l.even_indices().size() && ok; ++pos) {
      const FpVec& img = l.pmap().images[pos];
      auto pa = l.parity_of(img);
      if (!is_zero(img) && (!pa || *pa != Parity::even)) {
        ok = false;
        witness = l.name(l.even_indices()[pos]) + "^[p] = " + l.format(img);
      }
    }
    r.add("images-even", "x^[p] lies in the even part for every basis x", ok,
          witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t pos = 0; pos < l.even_indices().size() && ok; ++pos) {
      std::size_t j = l.even_indices()[pos];
      FpMat lhs = l.ad(l.pmap().images[pos]);
      FpMat rhs =
          l.ad(l.basis_vector(j)).pow(static_cast<std::uint64_t>(l.modulus()));
      if (lhs != rhs) {
        ok = false;
        witness = "ad(" + l.name(j) + "^[p]) != ad(" + l.name(j) + ")^p";
      }
    }
    r.add("adjoint-power", "ad(x^[p]) == ad(x)^p for every even basis x", ok,
          witness);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, l.modulus() - 1);
  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n < samples && ok; ++n) {
      FpVec x = random_homogeneous_vec(l, Parity::even, rng);
      Fp lam(coeff(rng), l.modulus());
      FpVec lhs = l.pmap_eval(lam * x);
      FpVec rhs = lam.pow(static_cast<std::uint64_t>(l.modulus())) *
                  l.pmap_eval(x);
      if (!(lhs == rhs)) {
        ok = false;
        witness = "x = " + l.format(x) +
                  ", lambda = " + std::to_string(lam.value());
      }
    }
    r.add("scalar-homogeneity", "(c x)^[p] == c^p x^[p] on sampled even x",
          ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n < samples && ok; ++n) {
      FpVec x = random_homogeneous_vec(l, Parity::even, rng);
      FpVec y = random_homogeneous_vec(l, Parity::even, rng);
      FpVec rhs = l.pmap_eval(x) + l.pmap_eval(y);
      for (const auto& s : s_coefficients(l, x, y)) rhs = rhs + s;
      if (!(l.pmap_eval(x + y) == rhs)) {
        ok = false;
        witness = "x = " + l.format(x) + ", y = " + l.format(y);
      }
    }
    r.add("sum-expansion",
          "(x+y)^[p] == x^[p] + y^[p] + sum_i s_i(x,y) on sampled even pairs",
          ok, witness);
  }
  return r;
}

FpMat LieModule::act(const FpVec& x) const {
  if (action.empty()) throw std::logic_error("LieModule: no action matrices");
  if (x.size() != action.size())
    throw std::invalid_argument("LieModule::act: size mismatch");
  FpMat m(action[0].rows(), action[0].cols(), action[0].modulus());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    m = m + x[i] * action[i];
  }
  return m;
}

LieModule adjoint_module(const LieSuperalgebra& l) {
  LieModule m;
  m.names = l.names();
  m.parities = l.parities();
  for (std::size_t i = 0; i < l.dim(); ++i)
    m.action.push_back(l.ad(l.basis_vector(i)));
  return m;
}

Report check_module(const LieSuperalgebra& l, const LieModule& m) {
  Report r;
  r.suite = "lie-module";
  if (m.action.size() != l.dim())
    throw std::invalid_argument("check_module: one matrix per basis element");
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < l.dim() && ok; ++i)
      if (!respects_grading(m.action[i], l.parity(i), m.parities,
                            m.parities)) {
        ok = false;
        witness = "action of " + l.name(i);
      }
    r.add("action-grading",
          "the action of x shifts module parities by |x|", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < l.dim() && ok; ++i)
      for (std::size_t j = 0; j < l.dim() && ok; ++j) {
        FpMat lhs = m.act(l.bracket_basis(i, j));
        FpMat rhs = m.action[i] * m.action[j];
        FpMat swapped = m.action[j] * m.action[i];
        if (both_odd(l.parity(i), l.parity(j)))
          rhs = rhs + swapped;
        else
          rhs = rhs - swapped;
        if (lhs != rhs) {
          ok = false;
          witness = "[" + l.name(i) + "," + l.name(j) + "]";
        }
      }
    r.add("bracket-compatibility",
          "phi([x,y]) == phi(x)phi(y) - (-1)^{|x||y|} phi(y)phi(x) on bases",
          ok, witness);
  }
  return r;
}

Report check_restricted_module(const LieSuperalgebra& l, const LieModule& m) {
  Report r = check_module(l, m);
  r.suite = "restricted-module";
  if (!l.has_pmap()) {
    r.add("p-power-action", "x^p . m == x^[p] . m for even basis x", false,
          "no p-map");
    return r;
  }
  bool ok = true;
  std::string witness;
  for (std::size_t pos = 0; pos < l.even_indices().size() && ok; ++pos) {
    std::size_t j = l.even_indices()[pos];
    FpMat lhs =
        m.action[j].pow(static_cast<std::uint64_t>(l.modulus()));
    FpMat rhs = m.act(l.pmap().images[pos]);
    if (lhs != rhs) {
      ok = false;
      witness = l.name(j);
    }
  }
  r.add("p-power-action", "x^p . m == x^[p] . m for every even basis x", ok,
        witness);
  return r;
}

LieSuperalgebra lie_from_derivations(const SuperAlgebra& a,
                                     const DerivationSpace& ds) {
  const std::int64_t p = a.modulus();
  auto maps = ds.all();
  const std::size_t n = maps.size();

  std::vector<FpVec> span;
  for (const auto& g : maps) span.push_back(g.matrix.flatten());

  auto coords_of = [&](const FpMat& m, const char* what) {
    auto c = coordinates_in_span(span, m.flatten(), p);
    if (!c)
      throw FlagViolation(std::string(what) +
                          " leaves the derivation space");
    return *c;
  };

  std::vector<std::string> names(n);
  std::vector<Parity> parities(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "D" + std::to_string(i + 1);
    parities[i] = maps[i].parity;
  }
  std::vector<std::vector<FpVec>> brackets(
      n, std::vector<FpVec>(n, fp_zero_vec(n, p)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpMat comm = maps[i].matrix * maps[j].matrix;
      FpMat swapped = maps[j].matrix * maps[i].matrix;
      if (both_odd(maps[i].parity, maps[j].parity))
        comm = comm + swapped;
      else
        comm = comm - swapped;
      brackets[i][j] = coords_of(comm, "commutator");
    }

  LieSuperalgebra l(std::move(names), std::move(parities),
                    std::move(brackets), p);
  PMap pm;
  for (std::size_t pos = 0; pos < l.even_indices().size(); ++pos) {
    const FpMat& m = maps[l.even_indices()[pos]].matrix;
    pm.images.push_back(
        coords_of(m.pow(static_cast<std::uint64_t>(p)), "p-th power"));
  }
  l.set_pmap(std::move(pm));
  return l;
}

}  // namespace rinehart
