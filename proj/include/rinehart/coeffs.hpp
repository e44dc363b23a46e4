#pragma once
// The rational coefficients mu_{k,i} appearing in the expansion of
// Gamma_{k,2} as a sum of products Y_i Y_{k-2-i}, their binomial closed
// forms, the pair-combined ("simplified") presentation, and the reduced
// coefficient vector lambda_0..lambda_{p-1} over F_p that enters the
// 2p-th power identity in the even/odd grading.

#include <cstdint>
#include <vector>

#include "rinehart/scalar.hpp"
#include "rinehart/smash.hpp"

namespace rinehart {

// Triangular table of mu_{k,i} for 3 <= k, 0 <= i <= k-2, built from
//   mu_{3,0} = mu_{3,1} = 1/2
//   mu_{k,0} = mu_{k-1,0} + (-1)^k
//   mu_{k,i} = mu_{k-1,i-1} + (-1)^i mu_{k-1,i}   (1 <= i <= k-3)
//   mu_{k,k-2} = 1/2
// Rows grow on demand; out-of-range indices throw std::out_of_range.
class MuTable {
 public:
  explicit MuTable(int k_max = 3);

  const Rat& mu(int k, int i);
  int k_max() const { return static_cast<int>(rows_.size()) + 2; }

 private:
  void extend(int k_max);
  std::vector<std::vector<Rat>> rows_;  // rows_[k-3][i]
};

// Closed form of mu_{k,i} via binomials, split on the parities of k and i:
//   mu_{2r+2,2j}   = 1/2 C(r,j) + C(r-1,j)      mu_{2r+2,2j+1} = -C(r-1,j+1)
//   mu_{2r+3,2j}   = 1/2 C(r,j)                 mu_{2r+3,2j+1} = 1/2 C(r,j) + C(r,j+1)
// Defined for k >= 4, 0 <= i <= k-2; throws std::out_of_range otherwise.
Rat mu_closed(int k, int i);

// Pair-combined coefficients of the Gamma_{k,2} expansion, in the convention
// that reproduces the symmetrised displays: for odd k the pair {i, k-2-i}
// collapses onto the lower index with no sign, for even k it collapses with
// the sign (-1)^i and the middle entry stands alone.  The result has
// (k-1)/2 entries for odd k and k/2 entries for even k.
std::vector<Rat> simplified_coefficients(MuTable& table, int k);

// Reduced coefficients lambda_0..lambda_{p-1} over F_p.
struct LambdaVector {
  std::int64_t p = 0;
  std::vector<Fp> entries;

  bool operator==(const LambdaVector&) const = default;
};

// lambda_i = mu_{2p,i} + (-1)^i mu_{2p,2p-2-i} for i != p-1 and
// lambda_{p-1} = mu_{2p,p-1}, reduced mod p.
LambdaVector lambda_from_mu(std::int64_t p);

// The closed form: 2(-1)^{i/2} for even i < p-1, 2(-1)^{(i-1)/2} for odd
// i < p-1, and (-1)^{(p-1)/2} for i = p-1.
LambdaVector lambda_closed(std::int64_t p);

// Computes both routes, insists they agree, and returns the vector.
LambdaVector lambda_vector(std::int64_t p);

// Exact check of Gamma_{k,2} = sum_i mu_{k,i} Y_i Y_{k-2-i} over the
// rationals, with Y_i = (x0 delta)^i (x0).  The table must be graded
// even x0 / odd delta; anything else throws std::invalid_argument.
struct Gamma2Decomposition {
  int k = 0;
  std::vector<Rat> mu_row;  // mu_{k,0} .. mu_{k,k-2}
  bool exact = false;
};
Gamma2Decomposition gamma2_decompose(GammaTable& gammas, MuTable& mus, int k);

}  // namespace rinehart
