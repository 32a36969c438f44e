#include "leibniz/matrix.hpp"

#include <utility>

namespace leibniz {

Vec zero_vector(const Field &f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vector(const Field &f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

bool is_zero_vector(const Vec &v) {
  for (const Scalar &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Vec add(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw DimensionMismatchError("vector sizes differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

Vec scaled(const Vec &v, const Scalar &c) {
  Vec r = v;
  for (Scalar &x : r)
    x *= c;
  return r;
}

Matrix::Matrix(const Field &field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      entries_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field &field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field &field, std::size_t cols,
                         const std::vector<Vec> &rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatchError("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    v.push_back((*this)(i, j));
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v.push_back((*this)(i, j));
  return v;
}

Vec Matrix::apply(const Vec &x) const {
  if (x.size() != cols_)
    throw DimensionMismatchError("matrix-vector size mismatch");
  Vec y(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j).is_zero() || x[j].is_zero())
        continue;
      y[i] += (*this)(i, j) * x[j];
    }
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::flattened() const { return entries_; }

Matrix Matrix::from_flat(const Field &field, std::size_t rows,
                         std::size_t cols, const Vec &flat) {
  if (flat.size() != rows * cols)
    throw DimensionMismatchError("flat vector has wrong length");
  Matrix m(field, rows, cols);
  m.entries_ = flat;
  return m;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatchError("matrix shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatchError("matrix shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.field_ != b.field_ || a.cols_ != b.rows_)
    throw DimensionMismatchError("matrix product shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero())
          continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

Matrix Matrix::scaled(const Scalar &c) const {
  Matrix m = *this;
  for (Scalar &x : m.entries_)
    x *= c;
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar &x : entries_)
    if (!x.is_zero())
      return false;
  return true;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    if (pivot_row == rows)
      continue;
    if (pivot_row != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m(r, j), m(pivot_row, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero())
        continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

std::optional<Vec> solve(const Matrix &a, const Vec &b) {
  if (b.size() != a.rows())
    throw DimensionMismatchError("right-hand side has wrong length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult red = rref(std::move(aug));
  for (std::size_t i = 0; i < red.rank; ++i)
    if (red.pivot_columns[i] == a.cols())
      return std::nullopt;
  Vec x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    x[red.pivot_columns[i]] = red.matrix(i, a.cols());
  return x;
}

} // namespace leibniz
