#pragma once
// Dense linear algebra over F_p: vectors, matrices, row reduction, kernels,
// and exact solving of A x = b.  Everything downstream is desk-scale (dims in
// the tens), so plain Gaussian elimination is all we need.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rinehart/scalar.hpp"

namespace rinehart {

using FpVec = std::vector<Fp>;

FpVec fp_zero_vec(std::size_t n, std::int64_t p);
FpVec fp_unit_vec(std::size_t n, std::size_t i, std::int64_t p);
bool is_zero(const FpVec& v);
FpVec operator+(const FpVec& a, const FpVec& b);
FpVec operator-(const FpVec& a, const FpVec& b);
FpVec operator*(const Fp& c, const FpVec& v);

class FpMat;
FpMat operator*(const Fp& c, const FpMat& m);

class FpMat {
 public:
  FpMat(std::size_t rows, std::size_t cols, std::int64_t p);  // zero matrix
  static FpMat identity(std::size_t n, std::int64_t p);
  // Column j is the image of the j-th source basis vector.
  static FpMat from_columns(const std::vector<FpVec>& cols, std::int64_t p,
                            std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t modulus() const { return p_; }

  Fp& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Fp& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  FpMat operator*(const FpMat& o) const;
  FpVec operator*(const FpVec& v) const;
  FpMat operator-() const;
  FpMat pow(std::uint64_t e) const;  // square matrices only
  bool operator==(const FpMat& o) const;
  bool operator!=(const FpMat& o) const { return !(*this == o); }
  bool is_zero() const;

  FpVec column(std::size_t j) const;
  // Row-major flattening, used to treat matrix equations as vector equations.
  FpVec flatten() const;

 private:
  std::size_t rows_, cols_;
  std::int64_t p_;
  std::vector<Fp> a_;
};

// Reduced row echelon form; pivot column indices are appended to *pivots when
// it is non-null.
FpMat rref(const FpMat& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FpMat& m);
// Basis of the right kernel {x : m x = 0}.
std::vector<FpVec> nullspace(const FpMat& m);
// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<FpVec> solve(const FpMat& m, const FpVec& b);
// Coordinates of v in the span of the given vectors, or nullopt.
std::optional<FpVec> coordinates_in_span(const std::vector<FpVec>& span,
                                         const FpVec& v, std::int64_t p);

}  // namespace rinehart
