#pragma once

#include <vector>

#include "gcat/scalar.hpp"

namespace gcat {

/// Dense matrix over cyclotomic scalars.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(size_t n);
  static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Reduced row echelon form in place; returns pivot columns in order.
  /// Pivot rule: leftmost nonzero column, then smallest row index.
  std::vector<size_t> rref();
  size_t rank() const;
  Mat inverse() const;  // throws math_error if singular
  bool invertible() const;

  /// Basis of the right kernel (columns).
  Mat kernel() const;

  std::string str() const;

 private:
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

/// Result of an exact linear solve A x = b (b may have several columns).
struct SolveResult {
  bool consistent = false;
  Mat particular;  // one solution per column of b (valid if consistent)
  Mat nullspace;   // basis of ker A as columns
};

SolveResult solve_linear(const Mat& A, const Mat& b);

/// (r, p, q) with q*p = e, p*q = I_r; see split_idempotent.
struct SplittingTriple {
  size_t rank = 0;
  Mat p;  // r x n
  Mat q;  // n x r
};

/// Split an exact idempotent matrix. Throws math_error when e*e != e.
/// Deterministic: q is the column-space basis of e in pivot order.
SplittingTriple split_idempotent(const Mat& e);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

}  // namespace gcat
