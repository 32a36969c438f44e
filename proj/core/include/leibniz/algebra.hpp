#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// Which side(s) of the bracket a center or annihilator condition kills.
enum class Side { left, right, two_sided };

/// A finite-dimensional left Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.  The checked constructor verifies the
/// left Leibniz identity [[a,b],c] = [a,[b,c]] - [b,[a,c]] on all basis
/// triples, which suffices by trilinearity.  Instances are immutable and
/// all operations are pure, so values can be shared freely across threads.
class LeibnizAlgebra {
public:
  /// Throws IdentityViolationError with the first failing triple in
  /// lexicographic order if the table is not a left Leibniz algebra.
  static LeibnizAlgebra checked(const Field &field,
                                std::vector<std::string> names,
                                std::vector<Scalar> structure_constants);

  /// Skips the identity check.  Exists so that tests can build deliberately
  /// broken tables; analysis results on unchecked non-Leibniz tables are
  /// meaningless.
  static LeibnizAlgebra unchecked(const Field &field,
                                  std::vector<std::string> names,
                                  std::vector<Scalar> structure_constants);

  const Field &field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string> &basis_names() const noexcept {
    return names_;
  }

  /// Structure constant of e_k in [e_i, e_j].
  const Scalar &c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Scalar> &structure_constants() const noexcept {
    return c_;
  }

  /// Bilinear extension of the table to coordinate vectors.
  Vec bracket(const Vec &x, const Vec &y) const;
  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// [x, e_j] and [e_i, y]: the partial evaluations the linear solves need.
  Vec bracket_right_basis(const Vec &x, std::size_t j) const;
  Vec bracket_left_basis(std::size_t i, const Vec &y) const;

  /// First basis triple (i,j,k) violating the left Leibniz identity, in
  /// lexicographic order; nullopt when the identity holds.
  std::optional<std::array<std::size_t, 3>> leibniz_counterexample() const;

  /// True iff [x,x] = 0 for every x: the table is alternating
  /// (c[i][i][.] = 0 and c[i][j][.] + c[j][i][.] = 0).
  bool is_lie() const;

  /// Span of { [e_i,e_i] } and { [e_i,e_j] + [e_j,e_i] : i < j }, which by
  /// the polarization identity equals the span of all squares [x,x] in
  /// every characteristic.
  Subspace leibniz_kernel() const;

  Subspace center(Side side) const;
  Subspace annihilator(const Vec &a, Side side) const;

  /// Span of all brackets [s, t] with s in S and t in T.
  Subspace product(const Subspace &s, const Subspace &t) const;

  Subspace full_space() const { return Subspace::full(field_, dim()); }

  /// gamma_1 = L, gamma_{k+1} = [L, gamma_k], listed until stabilization.
  std::vector<Subspace> lower_central_series() const;
  /// Smallest c with gamma_{c+1} = 0, or nullopt when the series stabilizes
  /// at a nonzero term (the lower hypocenter).
  std::optional<std::size_t> nilpotency_class() const;

  /// zeta_0 = 0, zeta_{k+1} = { x : [x,L] and [L,x] lie in zeta_k }, listed
  /// until stabilization.  This membership characterization avoids building
  /// quotient algebras.
  std::vector<Subspace> upper_central_series() const;

  bool is_ideal(const Subspace &s) const;
  bool is_subalgebra(const Subspace &s) const;
  bool is_abelian_subspace(const Subspace &s) const;

  /// [L,L] = zeta(L) of dimension 1.
  bool is_extraspecial() const;

  /// Structural equality: same field, basis names and table.
  friend bool operator==(const LeibnizAlgebra &,
                         const LeibnizAlgebra &) = default;

private:
  LeibnizAlgebra(const Field &field, std::vector<std::string> names,
                 std::vector<Scalar> c);

  Field field_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_; // dim^3, index (i * dim + j) * dim + k
};

/// Incremental construction of a structure-constant table: brackets not
/// set are zero.
class AlgebraBuilder {
public:
  AlgebraBuilder(const Field &field, std::vector<std::string> names);

  const Field &field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }

  void set_bracket(std::size_t i, std::size_t j, const Vec &value);

  LeibnizAlgebra checked() const;
  LeibnizAlgebra unchecked() const;

private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
};

} // namespace leibniz
