#pragma once
// Bundles (A, L, rho): a supercommutative unital algebra A acting on a Lie
// superalgebra L, with an anchor rho: L -> Der(A).  Provides checkers for
// the bundle axioms, for the four p-th-power compatibility identities, for
// representations and the operator identities they satisfy in End(M), the
// semidirect product of a bundle with a representation, a morphism checker,
// and a small library of built-in examples.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinehart/liesuper.hpp"
#include "rinehart/report.hpp"
#include "rinehart/superalgebra.hpp"

namespace rinehart {

struct UnknownExample : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structure constants of the triple.  Construction checks shapes, the
// modulus, and that A is supercommutative and unital; the axioms that make
// the triple a genuine bundle are the business of check_lr.
class LRData {
 public:
  // action[i][j] holds the coordinates in L of e_i . x_j; anchor[j] is the
  // matrix of rho(x_j) acting on A.
  LRData(SuperAlgebra a, LieSuperalgebra l,
         std::vector<std::vector<FpVec>> action, std::vector<FpMat> anchor);

  const SuperAlgebra& base() const { return a_; }
  const LieSuperalgebra& lie() const { return l_; }
  LieSuperalgebra& lie() { return l_; }
  std::int64_t modulus() const { return a_.modulus(); }

  const FpVec& action_constant(std::size_t i, std::size_t j) const {
    return action_[i][j];
  }
  const FpMat& anchor_constant(std::size_t j) const { return anchor_[j]; }

  // Bilinear extension of the action: the element a.x of L.
  FpVec act(const FpVec& a, const FpVec& x) const;
  // Linear extension of the anchor: the matrix of rho(x) on A.
  FpMat anchor_of(const FpVec& x) const;

 private:
  SuperAlgebra a_;
  LieSuperalgebra l_;
  std::vector<std::vector<FpVec>> action_;
  std::vector<FpMat> anchor_;
};

// A graded module M carrying both an A-action and operators phi(x), stored
// as matrices over a named basis of M.
struct Representation {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<FpMat> a_action;  // one per basis element of A
  std::vector<FpMat> phi;       // one per basis element of L

  std::size_t dim() const { return names.size(); }
  FpMat act_a(const FpVec& a) const;   // linear extension
  FpMat phi_of(const FpVec& x) const;  // linear extension
};

// Structural axioms of the bundle, exhaustively on bases: A-module axioms
// for the action, grading / derivation / Lie-morphism / A-linearity of the
// anchor, and the Leibniz rule on all basis triples.
Report check_lr(const LRData& data);

// The four p-th-power compatibility identities, on every homogeneous basis
// pair and on seeded random homogeneous pairs (the identities are nonlinear,
// so bases alone are not conclusive).
Report check_restricted_lr(const LRData& data, int samples = 200,
                           std::uint64_t seed = 1);

// Module equations of a representation: the linear rule exhaustively on
// bases, the two p-th-power rules on seeded samples.
Report check_representation(const LRData& data, const Representation& rep,
                            int samples = 200, std::uint64_t seed = 1);

// Operator identities in End(M) for a module (phi, M) over the bundle, by
// parity case; phi(ax) is always computed from the element a.x of L.  The
// linear module rule is verified first as a precondition claim.
Report check_hochschild_theorem(const LRData& data, const Representation& rep,
                                int samples = 200, std::uint64_t seed = 1);

// Restriction of A and L to their even parts (the module of a representation
// is kept whole).  Exercises the purely even specialization of the checkers.
LRData even_part_bundle(const LRData& data);
Representation even_part_representation(const LRData& data,
                                        const Representation& rep);

// The semidirect product: bracket constants on the product basis (L block
// first, module block second), the p-map assembled from e_i -> e_i^[p] and
// v_j -> 0, the computed center, and the extended bundle (A, L x V, rho~)
// with rho~(x+v) = rho(x) and the diagonal A-action.  When the center is
// trivial the compatibility checker runs on the extended bundle and its
// claims are embedded; otherwise that verdict is reported as not applicable.
struct SemidirectResult {
  LieSuperalgebra algebra;
  std::vector<FpVec> center;
  LRData extended;
  Report report;
  std::size_t lie_dim = 0;
  std::size_t module_dim = 0;

  FpVec embed_lie(const FpVec& x) const;
  FpVec embed_module(const FpVec& v) const;
};

SemidirectResult build_semidirect(const LRData& data,
                                  const Representation& rep,
                                  int samples = 100, std::uint64_t seed = 1);

// A bundle together with its natural representation (rho, A) -- the module
// is A itself, A acts by left multiplication and L through the anchor.  For
// the derivation bundles this is the representation (id, A).
struct BuiltinBundle {
  LRData data;
  Representation rep;
};

// (A, Der(A), id): the derivation algebra with a.D as module structure.
BuiltinBundle derivations_bundle(const SuperAlgebra& a);
// (Lambda(n), W(n), id) for the Grassmann algebra on n odd generators.
BuiltinBundle witt_bundle(int n, std::int64_t p);
// The 1|1-dimensional A = <e1 | e2> (e1 unit, e2^2 = 0) acting on the
// 2|1-dimensional L with [x1,x3] = x3, [x2,x3] = -x3, p-map family
// x1^[p] = x1 + alpha(x1+x2), x2^[p] = -x1 + alpha(x1+x2), and action
// e2 x1 = beta x3, e2 x2 = gamma x3; anchor rho(x1)(e2) = e2,
// rho(x2)(e2) = -e2.
BuiltinBundle example_bundle_2_1(std::int64_t p, std::int64_t alpha,
                                 std::int64_t beta, std::int64_t gamma);
// The companion 2|2-dimensional example: [x1,x3] = x3, [x1,x4] = x4,
// [x2,x4] = x3, p-map x1^[p] = x1, x2^[p] = 0, action e2 x1 = alpha x3,
// e2 x2 = beta x3, anchor rho(x1)(e2) = e2.
BuiltinBundle example_bundle_2_2(std::int64_t p, std::int64_t alpha,
                                 std::int64_t beta);

// Dispatch by name: "derivations", "witt", "example-2-1", "example-2-2".
// Recognized parameter keys: n (Grassmann rank, default 2), alpha, beta,
// gamma (defaults 1, 1, 0).  Unknown names throw UnknownExample.
BuiltinBundle builtin_bundle(const std::string& name, std::int64_t p,
                             const std::map<std::string, std::int64_t>& params = {});

// Morphism checker: phi maps base(src) -> base(dst) and psi maps
// lie(src) -> lie(dst), both as matrices in the chosen bases.  Both must be
// even; a parity-violating map is rejected in the precondition claim and
// nothing else is checked.
Report check_lr_morphism(const LRData& src, const LRData& dst,
                         const FpMat& phi, const FpMat& psi);

}  // namespace rinehart
