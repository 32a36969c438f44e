#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Coordinate vector over a Field.
using Vec = std::vector<Scalar>;

Vec zero_vector(const Field &f, std::size_t n);
Vec unit_vector(const Field &f, std::size_t n, std::size_t i);
bool is_zero_vector(const Vec &v);
Vec add(const Vec &a, const Vec &b);
Vec scaled(const Vec &v, const Scalar &c);

/// Dense matrix over an exact field, row-major.  Empty shapes (0 rows
/// and/or 0 columns) are legal.
class Matrix {
public:
  Matrix(const Field &field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field &field, std::size_t n);
  static Matrix from_rows(const Field &field, std::size_t cols,
                          const std::vector<Vec> &rows);

  const Field &field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Scalar &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  /// Matrix-vector product M x (x has cols() coordinates).
  Vec apply(const Vec &x) const;

  Matrix transposed() const;

  /// Row-major flattening, the convention shared with the derivation
  /// solver's variable ordering.
  Vec flattened() const;
  static Matrix from_flat(const Field &field, std::size_t rows,
                          std::size_t cols, const Vec &flat);

  Matrix &operator+=(const Matrix &rhs);
  Matrix &operator-=(const Matrix &rhs);
  friend Matrix operator+(Matrix lhs, const Matrix &rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix &rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  Matrix scaled(const Scalar &c) const;

  bool is_zero() const;
  friend bool operator==(const Matrix &, const Matrix &);

private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix matrix; // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with leading entries 1.  Pivot choice is the
/// first row holding a nonzero entry in the leftmost unresolved column, so
/// the output is deterministic; arithmetic is exact, so no magnitude
/// pivoting is involved.
RrefResult rref(Matrix m);

/// Some solution of A x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.  Throws DimensionMismatchError
/// when b has the wrong length.
std::optional<Vec> solve(const Matrix &a, const Vec &b);

} // namespace leibniz
