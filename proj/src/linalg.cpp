#include "gradedcover/linalg.hpp"

#include "gradedcover/errors.hpp"

namespace gcover {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DomainError("matrix-vector shape mismatch");
  std::vector<Rational> y(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < rows_; ++i)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  }
  return y;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

namespace {

// Row-reduce in place; returns pivot column per pivot row.
std::vector<int> rref(Matrix& m) {
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
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return Matrix(0, 0);
  Matrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = rref(aug);
  // invertible iff every column of the left block carries a pivot
  if (static_cast<int>(pivots.size()) < cols_ || pivots[cols_ - 1] != cols_ - 1)
    return std::nullopt;
  Matrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::optional<std::vector<Rational>> Matrix::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw DomainError("solve: rhs size mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = rref(aug);
  for (int c : pivots)
    if (c == cols_) return std::nullopt;  // 0 = 1 row: inconsistent
  std::vector<Rational> x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

std::vector<std::vector<Rational>> Matrix::nullspace() const {
  Matrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gcover
