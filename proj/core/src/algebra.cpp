#include "leibniz/algebra.hpp"

#include <utility>

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(const Field &field,
                               std::vector<std::string> names,
                               std::vector<Scalar> c)
    : field_(field), names_(std::move(names)), c_(std::move(c)) {
  const std::size_t n = names_.size();
  if (c_.size() != n * n * n)
    throw DimensionMismatchError("structure-constant tensor has wrong size");
  for (const Scalar &x : c_)
    if (x.field() != field_)
      throw MixedFieldsError("structure constant from a different field");
}

LeibnizAlgebra LeibnizAlgebra::unchecked(const Field &field,
                                         std::vector<std::string> names,
                                         std::vector<Scalar> c) {
  return LeibnizAlgebra(field, std::move(names), std::move(c));
}

LeibnizAlgebra LeibnizAlgebra::checked(const Field &field,
                                       std::vector<std::string> names,
                                       std::vector<Scalar> c) {
  LeibnizAlgebra a(field, std::move(names), std::move(c));
  if (auto bad = a.leibniz_counterexample()) {
    const auto &t = *bad;
    throw IdentityViolationError(
        t, "left Leibniz identity fails at basis triple (" +
               a.names_[t[0]] + ", " + a.names_[t[1]] + ", " + a.names_[t[2]] +
               ")");
  }
  return a;
}

Vec LeibnizAlgebra::bracket(const Vec &x, const Vec &y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw DimensionMismatchError("bracket operands have wrong length");
  Vec z = zero_vector(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &ck = c(i, j, k);
        if (!ck.is_zero())
          z[k] += xy * ck;
      }
    }
  }
  return z;
}

Vec LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Vec z;
  z.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    z.push_back(c(i, j, k));
  return z;
}

Vec LeibnizAlgebra::bracket_right_basis(const Vec &x, std::size_t j) const {
  const std::size_t n = dim();
  if (x.size() != n)
    throw DimensionMismatchError("bracket operand has wrong length");
  Vec z = zero_vector(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar &ck = c(i, j, k);
      if (!ck.is_zero())
        z[k] += x[i] * ck;
    }
  }
  return z;
}

Vec LeibnizAlgebra::bracket_left_basis(std::size_t i, const Vec &y) const {
  const std::size_t n = dim();
  if (y.size() != n)
    throw DimensionMismatchError("bracket operand has wrong length");
  Vec z = zero_vector(field_, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j].is_zero())
      continue;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar &ck = c(i, j, k);
      if (!ck.is_zero())
        z[k] += y[j] * ck;
    }
  }
  return z;
}

std::optional<std::array<std::size_t, 3>>
LeibnizAlgebra::leibniz_counterexample() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec eij = bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = bracket_right_basis(eij, k);
        Vec rhs = bracket_left_basis(i, bracket_basis(j, k));
        Vec sub = bracket_left_basis(j, bracket_basis(i, k));
        for (std::size_t t = 0; t < n; ++t)
          rhs[t] -= sub[t];
        if (lhs != rhs)
          return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool LeibnizAlgebra::is_lie() const {
  const std::size_t n = dim();
  // [x,x] = 0 for all x iff the quadratic map vanishes on the generators
  // produced by polarization.
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero_vector(bracket_basis(i, i)))
      return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero_vector(add(bracket_basis(i, j), bracket_basis(j, i))))
        return false;
  return true;
}

Subspace LeibnizAlgebra::leibniz_kernel() const {
  const std::size_t n = dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(bracket_basis(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(add(bracket_basis(i, j), bracket_basis(j, i)));
  return Subspace::span(field_, n, gens);
}

Subspace LeibnizAlgebra::center(Side side) const {
  const std::size_t n = dim();
  const bool left = side != Side::right;
  const bool right = side != Side::left;
  std::size_t blocks = (left ? 1 : 0) + (right ? 1 : 0);
  Matrix m(field_, blocks * n * n, n);
  std::size_t r = 0;
  if (left) {
    // [x, e_j] = 0: row (j,k), column i carries c[i][j][k].
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++r)
        for (std::size_t i = 0; i < n; ++i)
          m(r, i) = c(i, j, k);
  }
  if (right) {
    // [e_j, x] = 0: row (j,k), column i carries c[j][i][k].
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++r)
        for (std::size_t i = 0; i < n; ++i)
          m(r, i) = c(j, i, k);
  }
  return nullspace(m);
}

Subspace LeibnizAlgebra::annihilator(const Vec &a, Side side) const {
  const std::size_t n = dim();
  if (a.size() != n)
    throw DimensionMismatchError("annihilator argument has wrong length");
  const bool left = side != Side::right;
  const bool right = side != Side::left;
  std::size_t blocks = (left ? 1 : 0) + (right ? 1 : 0);
  Matrix m(field_, blocks * n, n);
  std::size_t r = 0;
  if (left) {
    // [x, a] = 0: row k, column i carries sum_j c[i][j][k] a_j.
    for (std::size_t k = 0; k < n; ++k, ++r)
      for (std::size_t i = 0; i < n; ++i) {
        Scalar acc = field_.zero();
        for (std::size_t j = 0; j < n; ++j)
          if (!a[j].is_zero())
            acc += c(i, j, k) * a[j];
        m(r, i) = acc;
      }
  }
  if (right) {
    // [a, x] = 0: row k, column i carries sum_j a_j c[j][i][k].
    for (std::size_t k = 0; k < n; ++k, ++r)
      for (std::size_t i = 0; i < n; ++i) {
        Scalar acc = field_.zero();
        for (std::size_t j = 0; j < n; ++j)
          if (!a[j].is_zero())
            acc += a[j] * c(j, i, k);
        m(r, i) = acc;
      }
  }
  return nullspace(m);
}

Subspace LeibnizAlgebra::product(const Subspace &s, const Subspace &t) const {
  if (s.field() != field_ || t.field() != field_ ||
      s.ambient_dim() != dim() || t.ambient_dim() != dim())
    throw DimensionMismatchError("subspace does not live in this algebra");
  std::vector<Vec> gens;
  gens.reserve(s.dim() * t.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      gens.push_back(bracket(s.basis_row(i), t.basis_row(j)));
  return Subspace::span(field_, dim(), gens);
}

std::vector<Subspace> LeibnizAlgebra::lower_central_series() const {
  std::vector<Subspace> series{full_space()};
  // Dimension strictly drops until stabilization, so n+1 terms suffice.
  for (std::size_t step = 0; step <= dim(); ++step) {
    Subspace next = product(full_space(), series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> LeibnizAlgebra::nilpotency_class() const {
  std::vector<Subspace> series = lower_central_series();
  if (series.back().dim() != 0)
    return std::nullopt;
  // gamma_1 ... gamma_m with gamma_m = 0 first zero term: class = m - 1.
  return series.size() - 1;
}

std::vector<Subspace> LeibnizAlgebra::upper_central_series() const {
  const std::size_t n = dim();
  std::vector<Subspace> series{Subspace::zero(field_, n)};
  for (std::size_t step = 0; step <= n; ++step) {
    const Subspace &z = series.back();
    // The reduction r(v) = v - sum_i v[p_i] B_i against the RREF basis of
    // z is linear and vanishes exactly on z, so x belongs to the next term
    // iff r([x, e_j]) = 0 and r([e_j, x]) = 0 for all j.
    Matrix reduce = Matrix::identity(field_, n);
    for (std::size_t i = 0; i < z.dim(); ++i) {
      std::size_t p = z.pivot_columns()[i];
      for (std::size_t row = 0; row < n; ++row)
        reduce(row, p) -= z.basis()(i, row);
    }
    Matrix sys(field_, 2 * n * n, n);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
      // Coordinate k of r([e_i, e_j]) as a linear form in x_i.
      for (std::size_t k = 0; k < n; ++k, ++r)
        for (std::size_t i = 0; i < n; ++i) {
          Scalar acc = field_.zero();
          for (std::size_t t = 0; t < n; ++t)
            acc += reduce(k, t) * c(i, j, t);
          sys(r, i) = acc;
        }
      for (std::size_t k = 0; k < n; ++k, ++r)
        for (std::size_t i = 0; i < n; ++i) {
          Scalar acc = field_.zero();
          for (std::size_t t = 0; t < n; ++t)
            acc += reduce(k, t) * c(j, i, t);
          sys(r, i) = acc;
        }
    }
    Subspace next = nullspace(sys);
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool LeibnizAlgebra::is_ideal(const Subspace &s) const {
  return s.contains(product(full_space(), s)) &&
         s.contains(product(s, full_space()));
}

bool LeibnizAlgebra::is_subalgebra(const Subspace &s) const {
  return s.contains(product(s, s));
}

bool LeibnizAlgebra::is_abelian_subspace(const Subspace &s) const {
  return product(s, s).dim() == 0;
}

bool LeibnizAlgebra::is_extraspecial() const {
  Subspace derived = product(full_space(), full_space());
  return derived.dim() == 1 && derived == center(Side::two_sided);
}

AlgebraBuilder::AlgebraBuilder(const Field &field,
                               std::vector<std::string> names)
    : field_(field), names_(std::move(names)),
      c_(names_.size() * names_.size() * names_.size(), field.zero()) {}

void AlgebraBuilder::set_bracket(std::size_t i, std::size_t j,
                                 const Vec &value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || value.size() != n)
    throw DimensionMismatchError("bracket assignment out of range");
  for (std::size_t k = 0; k < n; ++k)
    c_[(i * n + j) * n + k] = value[k];
}

LeibnizAlgebra AlgebraBuilder::checked() const {
  return LeibnizAlgebra::checked(field_, names_, c_);
}

LeibnizAlgebra AlgebraBuilder::unchecked() const {
  return LeibnizAlgebra::unchecked(field_, names_, c_);
}

} // namespace leibniz
