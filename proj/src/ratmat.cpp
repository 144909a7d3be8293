#include "cpspinor/ratmat.hpp"

#include <utility>

namespace cpspinor {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in addition");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in subtraction");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch in multiplication");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

RatMat RatMat::operator*(const Rat& s) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

RatMat RatMat::transposed() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMat::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::commutator(const RatMat& o) const { return *this * o - o * *this; }

RatVec RatMat::apply(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("vector length mismatch in matrix apply");
  RatVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatMat RatMat::kron(const RatMat& o) const {
  RatMat r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (x == 0) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q)
          if (o.at(p, q) != 0) r.at(i * o.rows_ + p, j * o.cols_ + q) = x * o.at(p, q);
    }
  return r;
}

bool RatMat::scalar_multiple_of_identity(Rat& s) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  s = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && at(i, j) != s) return false;
      if (i != j && at(i, j) != 0) return false;
    }
  return true;
}

namespace {

// Row echelon with deterministic (first nonzero) pivoting.  Returns pivot
// column per eliminated row.
std::vector<int> echelonize(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelonize(m).size()); }

RatMat solve(RatMat a, RatMat b) {
  if (a.rows() != a.cols()) throw InvalidInput("solve requires a square matrix");
  if (a.rows() != b.rows()) throw InvalidInput("matrix shape mismatch in solve");
  RatMat aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  std::vector<int> pivots = echelonize(aug);
  if (static_cast<int>(pivots.size()) != a.cols() || pivots.back() != a.cols() - 1)
    throw OracleFailure("singular linear system");
  RatMat x(a.cols(), b.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, a.cols() + j);
  return x;
}

RatMat inverse(const RatMat& m) { return solve(m, RatMat::identity(m.rows())); }

RatMat nullspace(RatMat m) {
  const int n = m.cols();
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMat basis(n, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
  }
  return basis;
}

RatMat vstack(const std::vector<RatMat>& parts) {
  if (parts.empty()) return RatMat();
  int cols = parts.front().cols();
  int rows = 0;
  for (const RatMat& p : parts) {
    if (p.cols() != cols) throw InvalidInput("vstack column mismatch");
    rows += p.rows();
  }
  RatMat r(rows, cols);
  int off = 0;
  for (const RatMat& p : parts) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.at(off + i, j) = p.at(i, j);
    off += p.rows();
  }
  return r;
}

}  // namespace cpspinor
