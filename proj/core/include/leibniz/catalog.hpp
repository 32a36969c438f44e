#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class CatalogKind { lei4, lei5, cyclic2, abelian, heisenberg };

std::string catalog_kind_name(CatalogKind kind);
std::optional<CatalogKind> catalog_kind_from_name(std::string_view name);

struct CatalogEntry {
  LeibnizAlgebra algebra;
  CatalogKind kind;
  std::optional<Scalar> lambda;
  /// Lei4 only: true iff X^2 + lambda has no root in the field.
  std::optional<bool> parameter_admissible;
};

/// The 3-dimensional algebra on a1, a2, a3 with [a1,a1] = a3 and
/// [a2,a2] = lambda a3, all other brackets zero.  Throws LambdaZeroError
/// when lambda = 0.  An inadmissible lambda still constructs (the table
/// satisfies the Leibniz identity regardless); the entry records the
/// admissibility verdict.
CatalogEntry lei4(const Field &field, const Scalar &lambda);

/// As lei4 but additionally [a1,a2] = a3 (and still [a2,a1] = 0).
CatalogEntry lei5(const Field &field, const Scalar &lambda);

/// Two-dimensional one-generator nilpotent algebra: [b,b] = c.
CatalogEntry cyclic_nilpotent_dim2(const Field &field);

/// n-dimensional algebra with every bracket zero.
CatalogEntry abelian(const Field &field, std::size_t n);

/// The Heisenberg Lie algebra: [e1,e2] = e3 = -[e2,e1].
CatalogEntry heisenberg(const Field &field);

/// True iff X^2 + lambda has no root in the field, i.e. -lambda is not a
/// square.  Throws LambdaZeroError when lambda = 0.
bool lei4_param_admissible(const Field &field, const Scalar &lambda);

struct NamedDerivation {
  std::string name;
  Matrix matrix;
};

/// The classically named derivations of the lei4/lei5 families, as
/// matrices in the columns-are-images convention, per characteristic:
///   char 2,  lei4: z, w, u, v   (u scales a1, v scales a2)
///   char 2,  lei5: z, w, u      (u scales both a1 and a2)
///   char != 2, both: z, w
/// where z: a1 -> a3 and w: a2 -> a3.  Throws std::invalid_argument for
/// other catalog kinds.
std::vector<NamedDerivation> expected_der_basis(CatalogKind kind,
                                                const Field &field);

} // namespace leibniz
