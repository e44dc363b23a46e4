#pragma once
// Lie superalgebras over F_p by bracket structure constants, together with
// the p|2p machinery: s_i expansion coefficients, Jacobson's basis criterion
// for assembling a p-map (with the center as the solution family), and
// checkers for restrictedness of algebras and of modules.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/fpmat.hpp"
#include "rinehart/report.hpp"
#include "rinehart/superalgebra.hpp"

namespace rinehart {

// No element f satisfies ad_f = (ad_e)^p for some basis e.
struct NotRestrictable : std::domain_error {
  explicit NotRestrictable(const std::string& w) : std::domain_error(w) {}
};

// Basis images of the p-map, one per even basis element in basis order.
// General even elements are evaluated through scalar homogeneity and the
// s_i sum expansion; see LieSuperalgebra::pmap_eval.
struct PMap {
  std::vector<FpVec> images;
};

class LieSuperalgebra {
 public:
  // brackets[i][j] holds the coordinates of [e_i, e_j].  Construction throws
  // FlagViolation unless the constants are parity-additive, super
  // skew-symmetric, satisfy the super Jacobi identity, and [x,[x,x]] = 0 for
  // every odd basis x (not implied by Jacobi at p = 3).
  LieSuperalgebra(std::vector<std::string> names, std::vector<Parity> parities,
                  std::vector<std::vector<FpVec>> brackets, std::int64_t p);

  std::size_t dim() const { return names_.size(); }
  std::size_t dim_even() const { return even_.size(); }
  std::size_t dim_odd() const { return dim() - dim_even(); }
  std::int64_t modulus() const { return p_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  // Positions of the even basis elements, in declaration order.
  const std::vector<std::size_t>& even_indices() const { return even_; }

  FpVec zero() const { return fp_zero_vec(dim(), p_); }
  FpVec basis_vector(std::size_t i) const { return fp_unit_vec(dim(), i, p_); }
  const FpVec& bracket_basis(std::size_t i, std::size_t j) const {
    return brackets_[i][j];
  }
  FpVec bracket(const FpVec& x, const FpVec& y) const;
  FpMat ad(const FpVec& x) const;  // y -> [x, y]
  // x^2 = [x,x]/2 for odd homogeneous x.
  FpVec square(const FpVec& x) const;
  std::optional<Parity> parity_of(const FpVec& v) const;
  std::string format(const FpVec& v) const { return format_element(names_, v); }

  bool has_pmap() const { return pmap_.has_value(); }
  const PMap& pmap() const { return *pmap_; }
  // Validates only the shape (one image per even basis element); whether the
  // images make a genuine p-map is check_restricted's job.
  void set_pmap(PMap pm);

  // x^{[p]} for even homogeneous x: basis images extended by
  //   (c e)^{[p]} = c^p e^{[p]}   and   (x+y)^{[p]} = x^{[p]} + y^{[p]} + sum_i s_i(x,y).
  FpVec pmap_eval(const FpVec& x) const;
  // x^{[2p]} = (x^2)^{[p]} for odd homogeneous x.
  FpVec pmap_eval_2p(const FpVec& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<std::vector<FpVec>> brackets_;
  std::int64_t p_;
  std::vector<std::size_t> even_;
  std::optional<PMap> pmap_;

  void validate() const;
};

// Basis of {x : [x, y] = 0 for all y}.
std::vector<FpVec> center(const LieSuperalgebra& l);

// s_1..s_{p-1} for even homogeneous x, y, read off the lambda-expansion of
// ad_{lambda x + y}^{p-1}(x); every call is cross-checked against the nested-
// bracket closed form for the sum.
std::vector<FpVec> s_coefficients(const LieSuperalgebra& l, const FpVec& x,
                                  const FpVec& y);

// Solve ad_f = (ad_e)^p for every even basis e.  The solution set of each
// system is a translate of the even center, so the family is reported as one
// particular p-map plus the even-center basis.
struct JacobsonFamily {
  PMap particular;
  std::vector<FpVec> center_even;
};
JacobsonFamily jacobson_solve(const LieSuperalgebra& l);

// Axioms of a p|2p-structure: even images, ad(e^[p]) = ad(e)^p on the basis
// (exact), scalar homogeneity and the s_i sum expansion on seeded samples.
Report check_restricted(const LieSuperalgebra& l, int samples = 200,
                        std::uint64_t seed = 1);

// A module over L: one action matrix per basis element of L.
struct LieModule {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<FpMat> action;

  FpMat act(const FpVec& x) const;  // linear extension
};

LieModule adjoint_module(const LieSuperalgebra& l);

// Bracket compatibility and grading of the action matrices, on all bases.
Report check_module(const LieSuperalgebra& l, const LieModule& m);
// x^p . m = x^{[p]} . m for all even basis x, as matrices.
Report check_restricted_module(const LieSuperalgebra& l, const LieModule& m);

// The Lie superalgebra of a derivation space: bracket = super commutator,
// p-map = p-th matrix power on the even part.  Basis names D1, D2, ...
LieSuperalgebra lie_from_derivations(const SuperAlgebra& a,
                                     const DerivationSpace& ds);

}  // namespace rinehart
