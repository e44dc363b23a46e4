#include "rinehart/fpmat.hpp"

#include <stdexcept>

namespace rinehart {

namespace {

void check_same_size(const FpVec& a, const FpVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("FpVec: size mismatch");
}

}  // namespace

FpVec fp_zero_vec(std::size_t n, std::int64_t p) {
  return FpVec(n, Fp(0, p));
}

FpVec fp_unit_vec(std::size_t n, std::size_t i, std::int64_t p) {
  FpVec v = fp_zero_vec(n, p);
  v.at(i) = Fp(1, p);
  return v;
}

bool is_zero(const FpVec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

FpVec operator+(const FpVec& a, const FpVec& b) {
  check_same_size(a, b);
  FpVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

FpVec operator-(const FpVec& a, const FpVec& b) {
  check_same_size(a, b);
  FpVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

FpVec operator*(const Fp& c, const FpVec& v) {
  FpVec r = v;
  for (auto& x : r) x *= c;
  return r;
}

FpMat::FpMat(std::size_t rows, std::size_t cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, Fp(0, p)) {}

FpMat FpMat::identity(std::size_t n, std::int64_t p) {
  FpMat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp(1, p);
  return m;
}

FpMat FpMat::from_columns(const std::vector<FpVec>& cols, std::int64_t p,
                          std::size_t rows) {
  FpMat m(rows, cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw std::invalid_argument("from_columns: column size mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

FpMat FpMat::operator+(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("FpMat: shape mismatch");
  FpMat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("FpMat: shape mismatch");
  FpMat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FpMat: shape mismatch");
  FpMat r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fp& c = at(i, k);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += c * o.at(k, j);
    }
  return r;
}

FpVec FpMat::operator*(const FpVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("FpMat: shape mismatch");
  FpVec r = fp_zero_vec(rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

FpMat FpMat::operator-() const {
  FpMat r = *this;
  for (auto& c : r.a_) c = -c;
  return r;
}

FpMat FpMat::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::pow: not square");
  FpMat acc = identity(rows_, p_);
  FpMat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FpMat::operator==(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool FpMat::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

FpVec FpMat::column(std::size_t j) const {
  FpVec v = fp_zero_vec(rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

FpVec FpMat::flatten() const { return a_; }

FpMat operator*(const Fp& c, const FpMat& m) {
  FpMat r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) *= c;
  return r;
}

FpMat rref(const FpMat& m, std::vector<std::size_t>* pivots) {
  FpMat r = m;
  const std::int64_t p = m.modulus();
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r.at(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < r.cols(); ++j)
        std::swap(r.at(pivot, j), r.at(row, j));
    Fp inv = r.at(row, col).inverse();
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      Fp f = r.at(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j)
        r.at(i, j) -= f * r.at(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  (void)p;
  return r;
}

std::size_t rank(const FpMat& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<FpVec> nullspace(const FpMat& m) {
  std::vector<std::size_t> pivots;
  FpMat r = rref(m, &pivots);
  const std::int64_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<FpVec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    FpVec v = fp_zero_vec(m.cols(), p);
    v[free_col] = Fp(1, p);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FpVec> solve(const FpMat& m, const FpVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  const std::int64_t p = m.modulus();
  FpMat aug(m.rows(), m.cols() + 1, p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  FpMat r = rref(aug, &pivots);
  FpVec x = fp_zero_vec(m.cols(), p);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == m.cols()) return std::nullopt;  // pivot in the rhs column
    x[pivots[k]] = r.at(k, m.cols());
  }
  return x;
}

std::optional<FpVec> coordinates_in_span(const std::vector<FpVec>& span,
                                         const FpVec& v, std::int64_t p) {
  return solve(FpMat::from_columns(span, p, v.size()), v);
}

}  // namespace rinehart
