#pragma once
// Shape combinatorics for the rows Gamma_{k,k-r}: integer partitions written
// nondecreasing ("shapes"), the insertion maps Phi_i and the increment maps
// Psi_i with their preimage enumerations, Leibniz signs, the coefficient
// polynomials P_lambda / Q_lambda in the binomial basis, packed shapes, the
// finite-difference recurrence for P, and the bundled verification suite
// culminating in Gamma_{2p,p} = 0 mod p.
//
// Everything here lives in the grading with x0 even and delta odd, so the
// variable x_i has parity i mod 2.  A shape with a repeated odd entry names
// the zero monomial (an odd variable squares to zero); coefficient
// extraction treats such coefficients as 0, and the preimage-sum identities
// are only asserted for shapes whose monomial survives.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rinehart/report.hpp"
#include "rinehart/scalar.hpp"
#include "rinehart/smash.hpp"

namespace rinehart {

// A nondecreasing list of positive integers.  The constructor sorts; entries
// must be >= 1.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> entries);

  int weight() const;  // sum of entries
  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int entry(int u) const;  // 1-based, throws std::out_of_range

  bool contains(int value) const;
  // true when x^shape = 0 in V, i.e. some odd entry repeats
  bool monomial_vanishes() const;

  auto operator<=>(const Shape&) const = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const Shape& s);  // "(1,2,2)", "()" for the empty shape

// All shapes of weight t, in increasing lexicographic order; {()} for t = 0.
const std::vector<Shape>& shapes_of_weight(int t);

// sort(mu with one entry i inserted); mu must have weight t
Shape phi(int i, int t, const Shape& mu);
// sort(mu with entry u increased by i); u is 1-based
Shape psi(int i, int t, const Shape& mu, int u);
// (-1)^{number of odd entries strictly before position u}
int leibniz_sign(const Shape& mu, int u);

// Preimages over all of S^t.  phi_inverse has at most one element (delete one
// copy of i); psi_inverse enumerates pointers (mu, u), where distinct u with
// equal entries count separately.
std::vector<Shape> phi_inverse(int i, int t, const Shape& nu);
std::vector<std::pair<Shape, int>> psi_inverse(int i, int t, const Shape& nu);

// x^mu as a monomial of V; nullopt when it vanishes
std::optional<Monomial> shape_monomial(const Shape& mu);

// [x0^a x^mu] f; zero when a < 0 or x^mu = 0
Int extract_coefficient(const SuperPolyZ& f, int a, const Shape& mu);

// true iff lambda = (2,...,2) for even weight or (1,2,...,2) for odd weight
bool is_packed(const Shape& lambda);
// the unique packed shape of weight r
Shape packed_shape(int r);

// The coefficient sequence of x0^{2m-|lambda|} x^lambda down the rows
// Gamma_{2m,2m-r} (or Gamma_{2m+1,2m+1-r} for the odd-k variant), sampled at
// m = 0..m_max and interpolated in the binomial basis.  The fit uses the
// samples with m <= r+2; every later sample is validated against the
// interpolant and a mismatch throws InconsistentSamples.  m_max < r+2 throws
// InsufficientSamples.
struct PLambda {
  Shape shape;
  std::vector<Int> samples;  // index = m
  BinomPoly poly;
};

PLambda extract_P(GammaTable& gammas, const Shape& lambda, int m_max);
PLambda extract_Q(GammaTable& gammas, const Shape& lambda, int m_max);

// H = sum_mu C_mu x0^{n - |mu|} x^mu with every mu of one common weight
struct HomogeneousSum {
  int n = 0;                    // total degree of every monomial
  int t = 0;                    // common weight of the shapes
  std::map<Shape, Int> coeffs;  // mu -> C_mu
};

SuperPolyZ realize(const HomogeneousSum& h);

// Compares direct symbolic coefficient extraction against the preimage-sum
// formula: for nu of weight t+1 the coefficient of x0^{n-|nu|} x^nu in
// delta(H) via Phi_1/Psi_1 sums with Leibniz signs, and for nu of weight t+2
// the coefficient of x0^{n+2-|nu|} x^nu in x0^2 delta^2(H) via unsigned
// Phi_2/Psi_2 sums.  Shapes whose monomial vanishes are outside the
// identities' scope and return true; other weights throw.
bool check_coeff_extraction(const HomogeneousSum& h, const Shape& nu);

// Right-hand side of the finite-difference recurrence
//   P_lambda(m) - P_lambda(m-1) =
//       sum over Phi_2-preimages mu in S^{r-2} of (2m-2-|mu|) P_mu(m-1)
//     + sum over Psi_2-pointer preimages (mu,u), mu in S^{r-2}, of P_mu(m-1)
//     + sum over 1-free nu in S^{r-1} with sort(nu+{1}) = lambda of
//           sum over Psi_1-pointer preimages (mu,u) of nu, mu in S^{r-2},
//           of leibniz_sign(mu,u) P_mu(m-1)
//     + (-1)^{r+1} sum over 1-free mu in S^{r-1} with sort(mu+{1}) = lambda
//           of P_mu(m-1),
// where P_mu is supplied by the callback (evaluated at m-1 by the caller's
// polynomial).  Valid for lambda whose monomial does not vanish.
Rat delta_p_rhs(const Shape& lambda,
                const std::function<Rat(const Shape&, const Int&)>& p_lower,
                const Int& m);

// Full appendix verification: interpolation with held-out validation, degree
// bounds, packedness, leading coefficients, the finite-difference recurrence,
// row reconstruction, the packed-preimage propagation statements, and for
// each p in p_list the congruences P_lambda(p) = 0 mod p with the exact
// reconstruction of Gamma_{2p,p}.
Report verify_appendix_bundle(GammaTable& gammas, int r_max,
                              const std::vector<std::int64_t>& p_list);

}  // namespace rinehart
