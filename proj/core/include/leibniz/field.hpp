#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "leibniz/errors.hpp"

namespace leibniz {

class Scalar;

enum class FieldKind { rationals, prime_field };

/// An exact coefficient field: either the rationals or GF(p) for a prime p.
///
/// Field values are small, copyable tags; all element arithmetic lives on
/// Scalar.  Two fields compare equal iff they are the same mathematical
/// field.
class Field {
public:
  /// The field of rational numbers (characteristic 0).
  static Field rationals();

  /// The prime field GF(p).  Throws std::invalid_argument unless p is prime.
  /// Proper prime powers GF(p^k), k > 1, are not representable here.
  static Field gf(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }

  /// 0 for the rationals, p for GF(p).
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "GF(p)".
  std::string name() const;

  bool operator==(const Field &) const = default;

  Scalar zero() const;
  Scalar one() const;

  /// Canonical image of an integer in this field.
  Scalar integer(long value) const;
  Scalar integer(const mpz_class &value) const;

  /// num/den as an element of this field (den inverted mod p over GF(p)).
  /// Throws DivisionByZeroError if den vanishes in the field.
  Scalar fraction(long num, long den) const;

  /// Parses the scalar literal syntax: optional sign, decimal integer,
  /// optionally followed by '/' and a positive decimal integer.  Fractions
  /// are accepted only over the rationals; GF(p) literals are integers
  /// reduced mod p.  No floats.  Throws ParseError.
  Scalar parse(std::string_view text) const;

  /// True iff every nonzero element of the field is a square, decided by
  /// exhaustion over GF(p); always false for the rationals (2 is not a
  /// rational square).
  bool is_2_closed() const;

private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_; // 0 for the rationals

  friend class Scalar;
};

/// An element of a Field, stored in canonical form: rationals as reduced
/// fractions with positive denominator, GF(p) elements as residues in
/// [0, p).  Equality is structural.  Immutable in practice: every operation
/// returns a fresh value.
class Scalar {
public:
  /// Canonicalizes `value` into `field`: reduces the fraction over Q, or
  /// reduces the (necessarily integral) value mod p.
  Scalar(const Field &field, const mpq_class &value);

  const Field &field() const noexcept { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// The canonical value: a reduced fraction over Q, an integer residue
  /// over GF(p).
  const mpq_class &value() const noexcept { return value_; }

  Scalar operator-() const;
  Scalar inverse() const; // throws DivisionByZeroError on 0

  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  Scalar &operator/=(const Scalar &rhs); // throws DivisionByZeroError

  friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }

  /// Structural equality; scalars of different fields are never equal.
  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Canonical text form: "n" or "n/d" (residue digits over GF(p)).
  std::string str() const;

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) {
    return os << s.str();
  }

private:
  Scalar(const Field &field, mpq_class value, int /*canonical_tag*/)
      : field_(field), value_(std::move(value)) {}

  static void require_same_field(const Scalar &a, const Scalar &b);

  Field field_;
  mpq_class value_;

  friend class Field;
};

/// Square-root witness: a scalar r with r*r == a if one exists.  Over
/// GF(p) decided by exhaustive search (smallest witness returned); over
/// the rationals by the lowest-terms perfect-square criterion.  0 is
/// always a square with witness 0.
std::optional<Scalar> square_root(const Scalar &a);

inline bool is_square(const Scalar &a) { return square_root(a).has_value(); }

} // namespace leibniz
