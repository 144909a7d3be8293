#pragma once

#include <cstddef>
#include <vector>

#include "cpspinor/errors.hpp"
#include "cpspinor/rational.hpp"

namespace cpspinor {

/// Dense matrix over the exact rationals.  Row-major storage, value
/// semantics; every operation is exact.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator*(const Rat& s) const;

  RatMat transposed() const;
  Rat trace() const;
  bool is_zero() const;

  /// this*o - o*this.
  RatMat commutator(const RatMat& o) const;

  RatVec apply(const RatVec& v) const;

  /// Kronecker product (this (x) o).
  RatMat kron(const RatMat& o) const;

  /// True iff the matrix equals s * identity; fills s when so.
  bool scalar_multiple_of_identity(Rat& s) const;

 private:
  int rows_, cols_;
  RatVec a_;
};

/// Row echelon rank.
int rank(RatMat m);

/// Solves a x = b for square nonsingular a (b may have several columns).
/// Throws OracleFailure when a is singular.
RatMat solve(RatMat a, RatMat b);

RatMat inverse(const RatMat& m);

/// Basis of the right nullspace, as columns.
RatMat nullspace(RatMat m);

/// Stacks matrices vertically (all must share the column count).
RatMat vstack(const std::vector<RatMat>& parts);

}  // namespace cpspinor
