#include "leibniz/oracle.hpp"

#include "leibniz/derivations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leibniz {

namespace {

// Raw mod-p view of a structure-constant tensor; the oracle works on plain
// residues so its verdicts do not depend on the exact-arithmetic stack.
struct GfTensor {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::vector<std::uint64_t> c; // (i*n + j)*n + k

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * n + j) * n + k];
  }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

GfTensor extract(const LeibnizAlgebra &algebra) {
  const Field &f = algebra.field();
  if (f.kind() != FieldKind::prime_field)
    throw std::invalid_argument(
        "exhaustive oracle requires a finite prime field");
  GfTensor t;
  t.p = f.characteristic();
  t.n = algebra.dim();
  t.c.reserve(t.n * t.n * t.n);
  for (const Scalar &x : algebra.structure_constants())
    t.c.push_back(x.value().get_num().get_ui());
  return t;
}

// p^count if it stays within `limit`, otherwise nullopt.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::size_t count,
                                         std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (total > limit / p)
      return std::nullopt;
    total *= p;
  }
  return total <= limit ? std::optional(total) : std::nullopt;
}

// Advances a base-p odometer with the last digit fastest, which visits the
// digit strings in lexicographic order.  Returns false after the last one.
bool next_word(std::vector<std::uint64_t> &digits, std::uint64_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p)
      return true;
    digits[i] = 0;
  }
  return false;
}

Vec to_vec(const Field &f, const std::vector<std::uint64_t> &digits) {
  Vec v;
  v.reserve(digits.size());
  for (std::uint64_t d : digits)
    v.push_back(f.integer(static_cast<long>(d)));
  return v;
}

// Derivation identity for the flat candidate d (row-major), basis pair
// (i, j), coordinate k, over raw residues.
bool derivation_pair_holds(const GfTensor &t,
                           const std::vector<std::uint64_t> &d, std::size_t i,
                           std::size_t j) {
  const std::size_t n = t.n;
  const std::uint64_t p = t.p;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t lhs = 0; // f([e_i,e_j])_k = sum_r c[i][j][r] d[k][r]
    std::uint64_t rhs = 0; // [f(e_i),e_j]_k + [e_i,f(e_j)]_k
    for (std::size_t r = 0; r < n; ++r) {
      lhs = (lhs + mulmod(t.at(i, j, r), d[k * n + r], p)) % p;
      rhs = (rhs + mulmod(d[r * n + i], t.at(r, j, k), p)) % p;
      rhs = (rhs + mulmod(d[r * n + j], t.at(i, r, k), p)) % p;
    }
    if (lhs != rhs)
      return false;
  }
  return true;
}

std::uint64_t vector_space_size(const GfTensor &t, std::uint64_t limit,
                                const char *what) {
  auto size = checked_pow(t.p, t.n, limit);
  if (!size)
    throw SearchSpaceTooLargeError(
        std::string(what) + ": p^n exceeds the enumeration budget of " +
        std::to_string(limit));
  return *size;
}

std::uint64_t bracket_coord(const GfTensor &t,
                            const std::vector<std::uint64_t> &x,
                            const std::vector<std::uint64_t> &y,
                            std::size_t k) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < t.n; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < t.n; ++j) {
      if (y[j] == 0 || t.at(i, j, k) == 0)
        continue;
      acc = (acc + mulmod(mulmod(x[i], y[j], t.p), t.at(i, j, k), t.p)) % t.p;
    }
  }
  return acc;
}

} // namespace

std::vector<Matrix> enumerate_derivations(const LeibnizAlgebra &algebra,
                                          std::uint64_t limit) {
  GfTensor t = extract(algebra);
  const std::size_t n = t.n;
  if (!checked_pow(t.p, n * n, limit))
    throw SearchSpaceTooLargeError(
        "derivation enumeration: p^(n^2) exceeds the budget of " +
        std::to_string(limit));
  std::vector<Matrix> found;
  std::vector<std::uint64_t> d(n * n, 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j)
        ok = derivation_pair_holds(t, d, i, j);
    if (ok)
      found.push_back(
          Matrix::from_flat(algebra.field(), n, n, to_vec(algebra.field(), d)));
  } while (next_word(d, t.p));
  return found;
}

Subspace leib_kernel_bruteforce(const LeibnizAlgebra &algebra) {
  GfTensor t = extract(algebra);
  vector_space_size(t, oracle_vector_limit, "Leibniz kernel enumeration");
  std::vector<Vec> squares;
  std::vector<std::uint64_t> x(t.n, 0);
  do {
    Vec sq;
    sq.reserve(t.n);
    for (std::size_t k = 0; k < t.n; ++k)
      sq.push_back(algebra.field().integer(
          static_cast<long>(bracket_coord(t, x, x, k))));
    if (!is_zero_vector(sq))
      squares.push_back(std::move(sq));
  } while (next_word(x, t.p));
  return Subspace::span(algebra.field(), t.n, squares);
}

namespace {

Subspace survivors_span(const LeibnizAlgebra &algebra, const GfTensor &t,
                        Side side,
                        const std::vector<std::uint64_t> &partner_or_empty) {
  const std::size_t n = t.n;
  const bool left = side != Side::right;
  const bool right = side != Side::left;
  const bool against_basis = partner_or_empty.empty();
  std::vector<Vec> kept;
  std::vector<std::uint64_t> x(n, 0);
  std::vector<std::uint64_t> e(n, 0);
  do {
    bool ok = true;
    if (against_basis) {
      for (std::size_t j = 0; ok && j < n; ++j) {
        std::fill(e.begin(), e.end(), 0);
        e[j] = 1;
        for (std::size_t k = 0; ok && k < n; ++k) {
          if (left && bracket_coord(t, x, e, k) != 0)
            ok = false;
          if (right && bracket_coord(t, e, x, k) != 0)
            ok = false;
        }
      }
    } else {
      for (std::size_t k = 0; ok && k < n; ++k) {
        if (left && bracket_coord(t, x, partner_or_empty, k) != 0)
          ok = false;
        if (right && bracket_coord(t, partner_or_empty, x, k) != 0)
          ok = false;
      }
    }
    if (ok)
      kept.push_back(to_vec(algebra.field(), x));
  } while (next_word(x, t.p));
  return Subspace::span(algebra.field(), n, kept);
}

} // namespace

Subspace center_bruteforce(const LeibnizAlgebra &algebra, Side side) {
  GfTensor t = extract(algebra);
  vector_space_size(t, oracle_vector_limit, "center enumeration");
  return survivors_span(algebra, t, side, {});
}

Subspace annihilator_bruteforce(const LeibnizAlgebra &algebra, const Vec &a,
                                Side side) {
  GfTensor t = extract(algebra);
  vector_space_size(t, oracle_vector_limit, "annihilator enumeration");
  if (a.size() != t.n)
    throw DimensionMismatchError("annihilator argument has wrong length");
  std::vector<std::uint64_t> partner;
  partner.reserve(t.n);
  for (const Scalar &s : a)
    partner.push_back(s.value().get_num().get_ui());
  return survivors_span(algebra, t, side, partner);
}

OracleReport compare(const LeibnizAlgebra &algebra, std::uint64_t limit) {
  OracleReport report;
  std::vector<Matrix> brute = enumerate_derivations(algebra, limit);
  report.derivation_count = brute.size();

  // The derivation set is a subspace, so the count is an exact power of p.
  std::uint64_t p = algebra.field().characteristic();
  std::uint64_t count = report.derivation_count;
  std::size_t dim = 0;
  while (count > 1 && count % p == 0) {
    count /= p;
    ++dim;
  }
  report.derivation_dim = count == 1 ? dim : static_cast<std::size_t>(-1);

  DerivationAlgebra solver(algebra);
  report.solver_dim = solver.dim();

  std::vector<Vec> flats;
  flats.reserve(brute.size());
  for (const Matrix &m : brute)
    flats.push_back(m.flattened());
  Subspace brute_span = Subspace::span(
      algebra.field(), algebra.dim() * algebra.dim(), flats);
  report.derivations_match = report.derivation_dim == report.solver_dim &&
                             brute_span == solver.matrix_span();

  report.leib_kernel_match =
      leib_kernel_bruteforce(algebra) == algebra.leibniz_kernel();
  report.left_center_match =
      center_bruteforce(algebra, Side::left) == algebra.center(Side::left);
  report.right_center_match =
      center_bruteforce(algebra, Side::right) == algebra.center(Side::right);
  report.center_match = center_bruteforce(algebra, Side::two_sided) ==
                        algebra.center(Side::two_sided);

  report.annihilators_match = true;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    Vec e = unit_vector(algebra.field(), algebra.dim(), i);
    if (annihilator_bruteforce(algebra, e, Side::left) !=
        algebra.annihilator(e, Side::left))
      report.annihilators_match = false;
  }

  report.match = report.derivations_match && report.leib_kernel_match &&
                 report.left_center_match && report.right_center_match &&
                 report.center_match && report.annihilators_match;
  return report;
}

} // namespace leibniz
