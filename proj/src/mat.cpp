#include "gcat/mat.hpp"

#include <sstream>

namespace gcat {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch in +");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch in -");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw math_error("matrix shape mismatch in *");
  Mat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Mat::trace() const {
  if (rows_ != cols_) throw math_error("trace of non-square matrix");
  Scalar t;
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

std::vector<size_t> Mat::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pr = rows_;
    for (size_t i = row; i < rows_; ++i)
      if (!at(i, col).is_zero()) { pr = i; break; }
    if (pr == rows_) continue;
    if (pr != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(pr, j));
    Scalar inv = at(row, col).inverse();
    for (size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Scalar f = at(i, col);
      for (size_t j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t Mat::rank() const {
  Mat m = *this;
  return m.rref().size();
}

bool Mat::invertible() const { return rows_ == cols_ && rank() == rows_; }

Mat Mat::inverse() const {
  if (rows_ != cols_) throw math_error("inverse of non-square matrix");
  Mat aug = hstack(*this, identity(rows_));
  auto pivots = aug.rref();
  bool ok = pivots.size() == rows_ && (rows_ == 0 || pivots.back() == rows_ - 1);
  if (!ok) throw math_error("matrix not invertible");
  Mat inv(rows_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
  return inv;
}

Mat Mat::kernel() const {
  Mat m = *this;
  auto pivots = m.rref();
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Mat ker(cols_, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    ker.at(fc, k) = Scalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) ker.at(pivots[r], k) = -m.at(r, fc);
  }
  return ker;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

SolveResult solve_linear(const Mat& A, const Mat& b) {
  if (A.rows() != b.rows()) throw math_error("solve_linear shape mismatch");
  SolveResult res;
  Mat aug = hstack(A, b);
  auto pivots = aug.rref();
  // consistent iff no pivot falls in the b-columns
  res.consistent = pivots.empty() || pivots.back() < A.cols();
  res.nullspace = A.kernel();
  if (!res.consistent) return res;
  res.particular = Mat(A.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (size_t j = 0; j < b.cols(); ++j)
      res.particular.at(pivots[r], j) = aug.at(r, A.cols() + j);
  return res;
}

SplittingTriple split_idempotent(const Mat& e) {
  if (e.rows() != e.cols()) throw math_error("split_idempotent: non-square input");
  if (!(e * e == e)) throw math_error("split_idempotent: input is not idempotent");
  const size_t n = e.rows();
  // rref pivots of e identify an independent set of columns of e,
  // the column-space basis in pivot order
  std::vector<size_t> pivot_cols;
  {
    Mat m = e;
    pivot_cols = m.rref();
  }
  SplittingTriple st;
  st.rank = pivot_cols.size();
  st.q = Mat(n, st.rank);
  for (size_t k = 0; k < st.rank; ++k)
    for (size_t i = 0; i < n; ++i) st.q.at(i, k) = e.at(i, pivot_cols[k]);
  // p: coordinates of the columns of e in the basis q  =>  q * p = e
  SolveResult sr = solve_linear(st.q, e);
  if (!sr.consistent) throw internal_error("split_idempotent: coordinate solve failed");
  st.p = sr.particular;
  if (!(st.q * st.p == e) || !(st.p * st.q == Mat::identity(st.rank)))
    throw internal_error("split_idempotent: verification failed");
  return st;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw math_error("hstack shape mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw math_error("vstack shape mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

}  // namespace gcat
