#include "leibniz/subspace.hpp"

#include <utility>

namespace leibniz {

namespace {

// Trims an RREF result to its nonzero rows.
Matrix trimmed(const RrefResult &red, std::size_t cols) {
  Matrix b(red.matrix.field(), red.rank, cols);
  for (std::size_t i = 0; i < red.rank; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      b(i, j) = red.matrix(i, j);
  return b;
}

} // namespace

Subspace Subspace::zero(const Field &field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const Field &field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(const Field &field, std::size_t ambient_dim,
                        const std::vector<Vec> &vectors) {
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix &m) {
  RrefResult red = rref(m);
  return Subspace(trimmed(red, m.cols()), std::move(red.pivot_columns));
}

bool Subspace::contains(const Vec &v) const {
  return coordinates(v).has_value();
}

std::optional<Vec> Subspace::coordinates(const Vec &v) const {
  if (v.size() != ambient_dim())
    throw DimensionMismatchError("vector not in the ambient space");
  // Pivot columns of an RREF basis read the coordinates off directly:
  // rows other than i vanish at pivots_[i].
  Vec coords;
  coords.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    coords.push_back(v[pivots_[i]]);
  Vec residue = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero())
      continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      residue[j] -= coords[i] * basis_(i, j);
  }
  if (!is_zero_vector(residue))
    return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace &other) const {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i)))
      return false;
  return true;
}

void Subspace::require_compatible(const Subspace &s, const Subspace &t) {
  if (s.field() != t.field() || s.ambient_dim() != t.ambient_dim())
    throw DimensionMismatchError("subspaces live in different ambient spaces");
}

Subspace operator+(const Subspace &s, const Subspace &t) {
  Subspace::require_compatible(s, t);
  std::vector<Vec> rows;
  rows.reserve(s.dim() + t.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    rows.push_back(s.basis_row(i));
  for (std::size_t i = 0; i < t.dim(); ++i)
    rows.push_back(t.basis_row(i));
  return Subspace::span(s.field(), s.ambient_dim(), rows);
}

Subspace Subspace::intersect(const Subspace &other) const {
  require_compatible(*this, other);
  const std::size_t n = ambient_dim();
  const std::size_t k = dim(), l = other.dim();
  // Columns are [B_s^T | -B_t^T]; kernel vectors (x, y) satisfy
  // sum x_i s_i = sum y_j t_j, an element of the intersection.
  Matrix m(field(), n, k + l);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      m(i, j) = basis_(j, i);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < n; ++i)
      m(i, k + j) = -other.basis_(j, i);
  Subspace ker = nullspace(m);
  std::vector<Vec> gens;
  gens.reserve(ker.dim());
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec coeffs = ker.basis_row(r);
    Vec v = zero_vector(field(), n);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeffs[i].is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] += coeffs[i] * basis_(i, j);
    }
    gens.push_back(std::move(v));
  }
  return span(field(), n, gens);
}

Subspace nullspace(const Matrix &m) {
  RrefResult red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_columns)
    is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    Vec v = zero_vector(m.field(), cols);
    v[f] = m.field().one();
    for (std::size_t i = 0; i < red.rank; ++i)
      v[red.pivot_columns[i]] = -red.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), cols, basis);
}

} // namespace leibniz
