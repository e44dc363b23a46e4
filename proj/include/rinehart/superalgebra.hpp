#pragma once
// Finite-dimensional superalgebras over F_p presented by structure constants
// on a named homogeneous basis.  Construction verifies the properties the
// caller claims (associativity, supercommutativity, unit), so a SuperAlgebra
// that exists is one whose flags have been checked.  Also provides the
// Grassmann algebra builder and the derivation-space solver that underlies
// the Witt superalgebra.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/fpmat.hpp"
#include "rinehart/superpoly.hpp"

namespace rinehart {

// A claimed structural property fails on a concrete basis tuple.
struct FlagViolation : std::domain_error {
  explicit FlagViolation(const std::string& w) : std::domain_error(w) {}
};

// "2*e1 + e3" with named basis vectors; "0" for the zero vector.
std::string format_element(const std::vector<std::string>& names,
                           const FpVec& v);

class SuperAlgebra {
 public:
  struct Flags {
    bool associative = true;
    bool supercommutative = false;
    std::optional<std::size_t> unit;  // basis index acting as 1
  };

  // products[i][j] holds the coordinates of e_i * e_j.  Throws FlagViolation
  // if parity-additivity or any requested flag fails.
  SuperAlgebra(std::vector<std::string> names, std::vector<Parity> parities,
               std::vector<std::vector<FpVec>> products, std::int64_t p,
               Flags flags);

  std::size_t dim() const { return names_.size(); }
  std::size_t dim_even() const { return dim_even_; }
  std::size_t dim_odd() const { return dim() - dim_even_; }
  std::int64_t modulus() const { return p_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const Flags& flags() const { return flags_; }
  bool has_unit() const { return flags_.unit.has_value(); }
  std::size_t unit_index() const { return *flags_.unit; }

  FpVec zero() const { return fp_zero_vec(dim(), p_); }
  FpVec basis_vector(std::size_t i) const {
    return fp_unit_vec(dim(), i, p_);
  }
  FpVec unit_element() const { return basis_vector(unit_index()); }
  const FpVec& product(std::size_t i, std::size_t j) const {
    return products_[i][j];
  }
  FpVec mul(const FpVec& a, const FpVec& b) const;
  FpVec power(const FpVec& a, std::uint64_t e) const;  // requires a unit
  // Matrix of left multiplication by a.
  FpMat left_mul_matrix(const FpVec& a) const;

  // Parity of a homogeneous vector; nullopt for 0 or mixed vectors.
  std::optional<Parity> parity_of(const FpVec& v) const;
  std::string format(const FpVec& v) const { return format_element(names_, v); }

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<std::vector<FpVec>> products_;
  std::int64_t p_;
  Flags flags_;
  std::size_t dim_even_;

  void validate() const;
};

// Exterior algebra on n odd generators; basis indexed by subsets of {1..n}
// in graded-lexicographic order with the empty set (the unit) first.
// Products carry the shuffle sign and repeated generators give 0.
SuperAlgebra build_grassmann(int n, std::int64_t p);

// The base field as a 1-dimensional algebra (unit only).
SuperAlgebra field_algebra(std::int64_t p);

// End(V) for a superspace with the given parities: basis E_ij ("m -> e_i"
// applied to the coefficient of e_j), |E_ij| = |i| + |j|.
SuperAlgebra end_superalgebra(const std::vector<Parity>& parities,
                              std::int64_t p);

// An F_p-linear map with a declared parity: columns are images of source
// basis vectors.  respects_grading checks that each column lands in the
// source parity shifted by the map's parity.
struct GradedLinearMap {
  FpMat matrix;
  Parity parity;

  FpVec apply(const FpVec& v) const { return matrix * v; }
};

bool respects_grading(const FpMat& m, Parity map_parity,
                      const std::vector<Parity>& src,
                      const std::vector<Parity>& dst);

// Solutions D of the graded Leibniz rule
//   D(ab) = D(a) b + (-1)^{|D||a|} a D(b)
// on all basis pairs of A, as matrices acting on A, split by the parity of D.
struct DerivationSpace {
  std::vector<FpMat> even;
  std::vector<FpMat> odd;

  std::size_t total() const { return even.size() + odd.size(); }
  // even block then odd block, matching the basis-order convention.
  std::vector<GradedLinearMap> all() const;
};

DerivationSpace derivation_space(const SuperAlgebra& a);

// True when d satisfies the graded Leibniz rule of the given parity on all
// basis pairs of A.
bool is_derivation(const SuperAlgebra& a, const FpMat& d, Parity d_parity);

}  // namespace rinehart
