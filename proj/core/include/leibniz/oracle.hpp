#pragma once

#include <cstdint>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Default enumeration budget: covers GF(2) and GF(3) at dimension 3 (512
/// and 19683 candidate matrices) with headroom.
inline constexpr std::uint64_t oracle_default_limit = 2'000'000;

/// Budget for vector-space enumerations (kernel, centers, annihilators).
inline constexpr std::uint64_t oracle_vector_limit = 4096;

/// All n x n matrices over GF(p) satisfying the derivation identity on
/// every basis pair, found by exhausting the p^(n^2) candidates in
/// lexicographic entry order (row-major, first entry most significant).
/// The check runs on raw residues and never touches the linear solver, so
/// the result is an independent ground truth for Der(L).
/// Throws SearchSpaceTooLargeError when p^(n^2) > limit, and
/// DimensionMismatchError for algebras over the rationals.
std::vector<Matrix>
enumerate_derivations(const LeibnizAlgebra &algebra,
                      std::uint64_t limit = oracle_default_limit);

/// Span of { [x,x] : x in GF(p)^n }, all p^n vectors enumerated.
Subspace leib_kernel_bruteforce(const LeibnizAlgebra &algebra);

/// Span of the set of vectors annihilating every basis vector on the given
/// side(s), collected by enumerating all of GF(p)^n.
Subspace center_bruteforce(const LeibnizAlgebra &algebra, Side side);

/// Same, for { x : [x,a] = 0 } (left), { x : [a,x] = 0 } (right) or both.
Subspace annihilator_bruteforce(const LeibnizAlgebra &algebra, const Vec &a,
                                Side side);

struct OracleReport {
  std::uint64_t derivation_count = 0;
  /// log_p of derivation_count; the count is always an exact power of p.
  std::size_t derivation_dim = 0;
  std::size_t solver_dim = 0;
  bool derivations_match = false; // dims equal and spans equal
  bool leib_kernel_match = false;
  bool left_center_match = false;
  bool right_center_match = false;
  bool center_match = false;
  /// Left annihilator of every basis vector agrees with the solver.
  bool annihilators_match = false;
  bool match = false; // conjunction of all of the above
};

/// Runs solver and oracle side by side for derivations, the Leibniz
/// kernel, all three centers and the left annihilators of the basis
/// vectors, and reports per-item equality.
OracleReport compare(const LeibnizAlgebra &algebra,
                     std::uint64_t limit = oracle_default_limit);

} // namespace leibniz
