#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// The linearized derivation constraint of an algebra L: an n^3 x n^2
/// matrix whose kernel, reshaped row-major to n x n matrices, is Der(L).
///
/// Conventions: a derivation f is represented by the matrix D whose column
/// j holds the coordinates of f(e_j); variable (r, c) maps to index
/// r*n + c; the row for basis pair (i, j) and output coordinate k sits at
/// index (i*n + j)*n + k and encodes
///   coordinate k of [f(e_i), e_j] + [e_i, f(e_j)] - f([e_i, e_j]) = 0.
Matrix derivation_system(const LeibnizAlgebra &algebra);

/// First basis pair (i, j) where D fails the derivation property
/// f([e_i,e_j]) = [f(e_i),e_j] + [e_i,f(e_j)], or nullopt if D is a
/// derivation (checking basis pairs is complete by bilinearity).
std::optional<std::pair<std::size_t, std::size_t>>
derivation_counterexample(const LeibnizAlgebra &algebra, const Matrix &d);

bool is_derivation(const LeibnizAlgebra &algebra, const Matrix &d);

/// Commutator M1 M2 - M2 M1; under the columns-are-images convention this
/// is the matrix of f o g - g o f.
Matrix commutator(const Matrix &m1, const Matrix &m2);

/// Der(L) realized as a Lie algebra: a deterministic basis of derivation
/// matrices obtained from the kernel of the derivation system, together
/// with the structure constants of the commutator bracket expressed in
/// that basis.
class DerivationAlgebra {
public:
  explicit DerivationAlgebra(const LeibnizAlgebra &algebra);

  const LeibnizAlgebra &algebra() const noexcept { return algebra_; }

  /// Dimension m of Der(L).
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Matrix> &basis() const noexcept { return basis_; }

  /// Der(L) as a subspace of F^(n^2) (row-major flattening).
  const Subspace &matrix_span() const noexcept { return span_; }

  /// The induced Lie algebra on basis elements d_1..d_m; its structure
  /// constants satisfy [d_a, d_b] = sum_c lie_sc[a][b][c] d_c.  Built with
  /// the checked constructor, so the Jacobi identity holds by construction
  /// of the value (closure failures throw NotInSpanError instead).
  const LeibnizAlgebra &lie_algebra() const noexcept { return lie_; }
  const Scalar &structure_constant(std::size_t a, std::size_t b,
                                   std::size_t c) const {
    return lie_.c(a, b, c);
  }

  bool is_abelian() const;

  /// Unique coefficients expressing a derivation in the computed basis.
  /// Throws NotInSpanError if d is not a derivation of the algebra.
  Vec coordinates(const Matrix &d) const;

  /// Image of a subspace of L under basis derivation `index`.
  Subspace image_of(std::size_t index, const Subspace &s) const;

private:
  LeibnizAlgebra algebra_;
  std::vector<Matrix> basis_;
  Subspace span_;
  LeibnizAlgebra lie_;
};

/// Convenience: solve for Der(L).
inline DerivationAlgebra derivation_algebra(const LeibnizAlgebra &algebra) {
  return DerivationAlgebra(algebra);
}

struct NamedSubspaceCheck {
  std::string name;
  std::size_t dim = 0;
  bool is_ideal = false;
  bool is_subalgebra = false;
  bool is_abelian = false;
};

struct DerivationAnalysis {
  bool is_abelian = false;
  Subspace center;
  Subspace derived; // [D, D]
  std::vector<NamedSubspaceCheck> named;
  /// Valid when named subspaces were supplied: pairwise-trivial
  /// intersections and dimensions summing to dim D, with the sum spanning.
  bool named_direct_sum = false;
};

/// Structural report on D = Der(L), optionally checking named subspaces
/// (given in D-coordinates) for ideal/subalgebra/abelian status and for
/// decomposing D as a direct sum.
DerivationAnalysis
analyze(const DerivationAlgebra &der,
        const std::vector<std::pair<std::string, Subspace>> &named = {});

} // namespace leibniz
