#include "rinehart/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace rinehart {

std::string format_element(const std::vector<std::string>& names,
                           const FpVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i].value() != 1) out += std::to_string(v[i].value()) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

SuperAlgebra::SuperAlgebra(std::vector<std::string> names,
                           std::vector<Parity> parities,
                           std::vector<std::vector<FpVec>> products,
                           std::int64_t p, Flags flags)
    : names_(std::move(names)),
      parities_(std::move(parities)),
      products_(std::move(products)),
      p_(p),
      flags_(flags) {
  require_odd_prime(p_);
  const std::size_t d = names_.size();
  if (parities_.size() != d || products_.size() != d)
    throw std::invalid_argument("SuperAlgebra: table size mismatch");
  for (const auto& row : products_) {
    if (row.size() != d)
      throw std::invalid_argument("SuperAlgebra: table size mismatch");
    for (const auto& entry : row)
      if (entry.size() != d)
        throw std::invalid_argument("SuperAlgebra: table size mismatch");
  }
  if (flags_.unit && *flags_.unit >= d)
    throw std::invalid_argument("SuperAlgebra: unit index out of range");
  dim_even_ = 0;
  for (auto pa : parities_)
    if (pa == Parity::even) ++dim_even_;
  validate();
}

void SuperAlgebra::validate() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Parity expect = parities_[i] + parities_[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!products_[i][j][k].is_zero() && parities_[k] != expect)
          throw FlagViolation("parity additivity fails at " + names_[i] + "*" +
                              names_[j] + " -> " + names_[k]);
    }
  if (flags_.supercommutative) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        bool both_odd =
            parities_[i] == Parity::odd && parities_[j] == Parity::odd;
        FpVec rhs = products_[j][i];
        if (both_odd)
          for (auto& c : rhs) c = -c;
        if (!(products_[i][j] == rhs))
          throw FlagViolation("supercommutativity fails at " + names_[i] +
                              "*" + names_[j]);
      }
  }
  if (flags_.associative) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          FpVec left = mul(products_[i][j], basis_vector(k));
          FpVec right = mul(basis_vector(i), products_[j][k]);
          if (!(left == right))
            throw FlagViolation("associativity fails at (" + names_[i] + "*" +
                                names_[j] + ")*" + names_[k]);
        }
  }
  if (flags_.unit) {
    std::size_t u = *flags_.unit;
    for (std::size_t i = 0; i < d; ++i) {
      FpVec e = basis_vector(i);
      if (!(products_[u][i] == e) || !(products_[i][u] == e))
        throw FlagViolation("unit fails at " + names_[i]);
    }
  }
}

FpVec SuperAlgebra::mul(const FpVec& a, const FpVec& b) const {
  if (a.size() != dim() || b.size() != dim())
    throw std::invalid_argument("SuperAlgebra::mul: size mismatch");
  FpVec r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Fp c = a[i] * b[j];
      const FpVec& pr = products_[i][j];
      for (std::size_t k = 0; k < dim(); ++k) r[k] += c * pr[k];
    }
  }
  return r;
}

FpVec SuperAlgebra::power(const FpVec& a, std::uint64_t e) const {
  if (!has_unit())
    throw std::logic_error("SuperAlgebra::power: algebra has no unit");
  FpVec r = unit_element();
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

FpMat SuperAlgebra::left_mul_matrix(const FpVec& a) const {
  std::vector<FpVec> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    cols.push_back(mul(a, basis_vector(j)));
  return FpMat::from_columns(cols, p_, dim());
}

std::optional<Parity> SuperAlgebra::parity_of(const FpVec& v) const {
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

SuperAlgebra build_grassmann(int n, std::int64_t p) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("build_grassmann: n out of range");
  const std::size_t d = std::size_t{1} << n;

  // Subsets of {1..n} as bitmasks, graded-lexicographically: by size, then by
  // mask value, with the empty set (the unit) first.
  std::vector<unsigned> masks(d);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::size_t> pos(d);
  for (std::size_t i = 0; i < d; ++i) pos[masks[i]] = i;

  std::vector<std::string> names(d);
  std::vector<Parity> parities(d);
  for (std::size_t i = 0; i < d; ++i) {
    unsigned m = masks[i];
    std::string nm;
    for (int g = 1; g <= n; ++g)
      if (m & (1u << (g - 1))) nm += "x" + std::to_string(g);
    names[i] = nm.empty() ? "1" : nm;
    parities[i] = parity_of(std::popcount(m));
  }

  std::vector<std::vector<FpVec>> products(
      d, std::vector<FpVec>(d, fp_zero_vec(d, p)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      unsigned a = masks[i], b = masks[j];
      if (a & b) continue;  // repeated generator
      // Shuffle sign: one transposition per pair (s in a, t in b) with s > t.
      int inversions = 0;
      for (int s = 1; s <= n; ++s)
        if (a & (1u << (s - 1)))
          for (int t = 1; t < s; ++t)
            if (b & (1u << (t - 1))) ++inversions;
      products[i][j][pos[a | b]] = Fp(inversions % 2 == 0 ? 1 : -1, p);
    }

  SuperAlgebra::Flags flags;
  flags.associative = true;
  flags.supercommutative = true;
  flags.unit = 0;
  return SuperAlgebra(std::move(names), std::move(parities),
                      std::move(products), p, flags);
}

SuperAlgebra field_algebra(std::int64_t p) {
  std::vector<std::vector<FpVec>> products(
      1, std::vector<FpVec>(1, fp_unit_vec(1, 0, p)));
  SuperAlgebra::Flags flags;
  flags.associative = true;
  flags.supercommutative = true;
  flags.unit = 0;
  return SuperAlgebra({"1"}, {Parity::even}, std::move(products), p, flags);
}

SuperAlgebra end_superalgebra(const std::vector<Parity>& parities,
                              std::int64_t p) {
  const std::size_t d = parities.size();
  const std::size_t n = d * d;
  std::vector<std::string> names(n);
  std::vector<Parity> pars(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      names[i * d + j] =
          "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      pars[i * d + j] = parities[i] + parities[j];
    }
  // E_ij E_kl = [j == k] E_il (composition of "e_j-coefficient into e_i").
  std::vector<std::vector<FpVec>> products(
      n, std::vector<FpVec>(n, fp_zero_vec(n, p)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          if (j == k) products[i * d + j][k * d + l][i * d + l] = Fp(1, p);
  SuperAlgebra::Flags flags;
  flags.associative = true;
  flags.supercommutative = false;
  return SuperAlgebra(std::move(names), std::move(pars), std::move(products),
                      p, flags);
}

bool respects_grading(const FpMat& m, Parity map_parity,
                      const std::vector<Parity>& src,
                      const std::vector<Parity>& dst) {
  if (m.rows() != dst.size() || m.cols() != src.size()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero() && dst[i] != src[j] + map_parity)
        return false;
  return true;
}

namespace {

// Rows of the Leibniz system for derivations of one parity; variables are the
// d*d entries D_rm (row-major).
FpMat leibniz_system(const SuperAlgebra& a, Parity dp) {
  const std::size_t d = a.dim();
  const std::int64_t p = a.modulus();
  std::vector<FpVec> rows;

  // Parity constraints: D_ik = 0 unless |i| = |k| + |D|.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (a.parity(i) != a.parity(k) + dp)
        rows.push_back(fp_unit_vec(d * d, i * d + k, p));

  // D(e_j e_k) = D(e_j) e_k + (-1)^{|D||e_j|} e_j D(e_k), coordinate r.
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      bool flip = dp == Parity::odd && a.parity(j) == Parity::odd;
      for (std::size_t r = 0; r < d; ++r) {
        FpVec row = fp_zero_vec(d * d, p);
        for (std::size_t m = 0; m < d; ++m) {
          row[r * d + m] += a.product(j, k)[m];  // D(e_j e_k)
          row[m * d + j] -= a.product(m, k)[r];  // D(e_j) e_k
          Fp right = a.product(j, m)[r];         // e_j D(e_k)
          if (flip) right = -right;
          row[m * d + k] -= right;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }

  FpMat sys(rows.size(), d * d, p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d * d; ++j) sys.at(i, j) = rows[i][j];
  return sys;
}

std::vector<FpMat> unflatten_all(const std::vector<FpVec>& vs, std::size_t d,
                                 std::int64_t p) {
  std::vector<FpMat> out;
  for (const auto& v : vs) {
    FpMat m(d, d, p);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = v[i * d + j];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<GradedLinearMap> DerivationSpace::all() const {
  std::vector<GradedLinearMap> out;
  for (const auto& m : even) out.push_back({m, Parity::even});
  for (const auto& m : odd) out.push_back({m, Parity::odd});
  return out;
}

DerivationSpace derivation_space(const SuperAlgebra& a) {
  if (!a.flags().associative)
    throw std::invalid_argument("derivation_space: algebra not associative");
  DerivationSpace ds;
  ds.even =
      unflatten_all(nullspace(leibniz_system(a, Parity::even)), a.dim(),
                    a.modulus());
  ds.odd = unflatten_all(nullspace(leibniz_system(a, Parity::odd)), a.dim(),
                         a.modulus());
  return ds;
}

bool is_derivation(const SuperAlgebra& a, const FpMat& d, Parity d_parity) {
  const std::size_t n = a.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      FpVec lhs = d * a.product(j, k);
      FpVec rhs = a.mul(d * a.basis_vector(j), a.basis_vector(k));
      FpVec right = a.mul(a.basis_vector(j), d * a.basis_vector(k));
      if (d_parity == Parity::odd && a.parity(j) == Parity::odd)
        rhs = rhs - right;
      else
        rhs = rhs + right;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace rinehart
