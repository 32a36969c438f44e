#pragma once

#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// A linear subspace of F^n in canonical form: the basis matrix is the
/// reduced row echelon form of any generating set, with zero rows dropped.
/// Subspaces of the same ambient space therefore compare equal iff they
/// are the same set of vectors.
class Subspace {
public:
  static Subspace zero(const Field &field, std::size_t ambient_dim);
  static Subspace full(const Field &field, std::size_t ambient_dim);
  static Subspace span(const Field &field, std::size_t ambient_dim,
                       const std::vector<Vec> &vectors);
  /// Row space of a matrix.
  static Subspace row_space(const Matrix &m);

  const Field &field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }

  /// dim() x ambient_dim() RREF matrix with no zero rows.
  const Matrix &basis() const noexcept { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t> &pivot_columns() const noexcept {
    return pivots_;
  }

  bool contains(const Vec &v) const;
  bool contains(const Subspace &other) const;

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec &v) const;

  Subspace intersect(const Subspace &other) const;
  friend Subspace operator+(const Subspace &s, const Subspace &t);

  friend bool operator==(const Subspace &, const Subspace &) = default;

private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  static void require_compatible(const Subspace &s, const Subspace &t);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of M as a subspace of F^cols.  The raw basis assigns 1 to each
/// free column in increasing index order before canonicalization, so the
/// result is reproducible across runs.
Subspace nullspace(const Matrix &m);

} // namespace leibniz
