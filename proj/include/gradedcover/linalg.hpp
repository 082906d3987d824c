#pragma once

#include <optional>
#include <vector>

#include "gradedcover/rational.hpp"

namespace gcover {

// Dense exact-rational matrix.  Sizes in this library stay small (a few
// hundred rows at most), so straightforward Gaussian elimination is all we
// need; everything is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  int rank() const;
  bool is_zero() const;
  std::optional<Matrix> inverse() const;

  // Any solution of A x = b, or nullopt when the system is inconsistent.
  // Free variables are set to zero; when the columns are independent the
  // solution is unique.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  // Basis of the kernel, one vector per free column of the RREF.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace gcover
