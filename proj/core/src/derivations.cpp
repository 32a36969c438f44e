#include "leibniz/derivations.hpp"

#include <utility>

namespace leibniz {

Matrix derivation_system(const LeibnizAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  const Field &f = algebra.field();
  Matrix sys(f, n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row_base = (i * n + j) * n;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = row_base + k;
        // [f(e_i), e_j]_k = sum_r D[r][i] c[r][j][k]
        for (std::size_t r = 0; r < n; ++r)
          sys(row, r * n + i) += algebra.c(r, j, k);
        // [e_i, f(e_j)]_k = sum_r D[r][j] c[i][r][k]
        for (std::size_t r = 0; r < n; ++r)
          sys(row, r * n + j) += algebra.c(i, r, k);
        // -f([e_i, e_j])_k = -sum_r c[i][j][r] D[k][r]
        for (std::size_t r = 0; r < n; ++r)
          sys(row, k * n + r) -= algebra.c(i, j, r);
      }
    }
  return sys;
}

std::optional<std::pair<std::size_t, std::size_t>>
derivation_counterexample(const LeibnizAlgebra &algebra, const Matrix &d) {
  const std::size_t n = algebra.dim();
  if (d.rows() != n || d.cols() != n || d.field() != algebra.field())
    throw DimensionMismatchError("derivation candidate has wrong shape");
  std::vector<Vec> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(d.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = d.apply(algebra.bracket_basis(i, j));
      Vec rhs = add(algebra.bracket_right_basis(images[i], j),
                    algebra.bracket_left_basis(i, images[j]));
      if (lhs != rhs)
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_derivation(const LeibnizAlgebra &algebra, const Matrix &d) {
  return !derivation_counterexample(algebra, d).has_value();
}

Matrix commutator(const Matrix &m1, const Matrix &m2) {
  return m1 * m2 - m2 * m1;
}

DerivationAlgebra::DerivationAlgebra(const LeibnizAlgebra &algebra)
    : algebra_(algebra),
      span_(nullspace(derivation_system(algebra))),
      lie_(LeibnizAlgebra::unchecked(algebra.field(), {}, {})) {
  const std::size_t n = algebra_.dim();
  const Field &f = algebra_.field();
  const std::size_t m = span_.dim();

  basis_.reserve(m);
  for (std::size_t a = 0; a < m; ++a)
    basis_.push_back(Matrix::from_flat(f, n, n, span_.basis_row(a)));

  // Structure constants of the commutator bracket in the computed basis.
  std::vector<Scalar> lie_sc;
  lie_sc.reserve(m * m * m);
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t a = 0; a < m; ++a)
    names.push_back("d" + std::to_string(a + 1));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec coords = coordinates(commutator(basis_[a], basis_[b]));
      lie_sc.insert(lie_sc.end(), coords.begin(), coords.end());
    }
  // Der(L) is closed under the commutator and alternating, so this table
  // satisfies the left Leibniz identity (= Jacobi); checked() certifies it.
  lie_ = LeibnizAlgebra::checked(f, std::move(names), std::move(lie_sc));
}

bool DerivationAlgebra::is_abelian() const {
  for (const Scalar &x : lie_.structure_constants())
    if (!x.is_zero())
      return false;
  return true;
}

Vec DerivationAlgebra::coordinates(const Matrix &d) const {
  const std::size_t n = algebra_.dim();
  if (d.rows() != n || d.cols() != n || d.field() != algebra_.field())
    throw DimensionMismatchError("matrix has wrong shape for this algebra");
  auto coords = span_.coordinates(d.flattened());
  if (!coords)
    throw NotInSpanError("matrix is not a derivation of the algebra");
  return *coords;
}

Subspace DerivationAlgebra::image_of(std::size_t index,
                                     const Subspace &s) const {
  const Matrix &d = basis_.at(index);
  std::vector<Vec> images;
  images.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    images.push_back(d.apply(s.basis_row(i)));
  return Subspace::span(algebra_.field(), algebra_.dim(), images);
}

DerivationAnalysis
analyze(const DerivationAlgebra &der,
        const std::vector<std::pair<std::string, Subspace>> &named) {
  const LeibnizAlgebra &lie = der.lie_algebra();
  const std::size_t m = der.dim();
  DerivationAnalysis report{
      der.is_abelian(),
      lie.center(Side::two_sided),
      lie.product(lie.full_space(), lie.full_space()),
      {},
      false};
  if (named.empty())
    return report;

  std::size_t dim_sum = 0;
  Subspace total = Subspace::zero(lie.field(), m);
  bool pairwise_trivial = true;
  for (std::size_t i = 0; i < named.size(); ++i) {
    const auto &[name, s] = named[i];
    report.named.push_back(NamedSubspaceCheck{name, s.dim(), lie.is_ideal(s),
                                              lie.is_subalgebra(s),
                                              lie.is_abelian_subspace(s)});
    dim_sum += s.dim();
    total = total + s;
    for (std::size_t j = i + 1; j < named.size(); ++j)
      if (s.intersect(named[j].second).dim() != 0)
        pairwise_trivial = false;
  }
  report.named_direct_sum =
      pairwise_trivial && dim_sum == m && total == lie.full_space();
  return report;
}

} // namespace leibniz
