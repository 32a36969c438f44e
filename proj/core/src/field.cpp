#include "leibniz/field.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace leibniz {

namespace {

mpz_class mod_p(const mpz_class &x, std::uint64_t p) {
  mpz_class r;
  mpz_class m(static_cast<unsigned long>(p));
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

} // namespace

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::gf(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("GF(" + std::to_string(p) +
                                "): modulus must be prime");
  return Field(FieldKind::prime_field, p);
}

std::string Field::name() const {
  return kind_ == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::zero() const { return Scalar(*this, mpq_class(0), 0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long value) const { return integer(mpz_class(value)); }

Scalar Field::integer(const mpz_class &value) const {
  if (kind_ == FieldKind::prime_field)
    return Scalar(*this, mpq_class(mod_p(value, p_)), 0);
  return Scalar(*this, mpq_class(value), 0);
}

Scalar Field::fraction(long num, long den) const {
  return integer(num) / integer(den);
}

Scalar Field::parse(std::string_view text) const {
  auto fail = [&](const std::string &why) -> ParseError {
    return ParseError(0, "bad scalar '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == num_begin)
    throw fail("expected a decimal integer");
  mpz_class num(std::string(text.substr(num_begin, pos - num_begin)), 10);
  if (negative)
    num = -num;

  if (pos == text.size())
    return integer(num);

  if (text[pos] != '/')
    throw fail("unexpected character '" + std::string(1, text[pos]) + "'");
  ++pos;
  std::size_t den_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == den_begin || pos != text.size())
    throw fail("denominator must be a positive decimal integer");
  if (kind_ == FieldKind::prime_field)
    throw fail("fractions are not accepted over " + name());
  mpz_class den(std::string(text.substr(den_begin, pos - den_begin)), 10);
  if (den == 0)
    throw fail("denominator must be nonzero");

  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(*this, std::move(q), 0);
}

std::optional<Scalar> square_root(const Scalar &a) {
  const Field &f = a.field();
  if (f.kind() == FieldKind::prime_field) {
    // Exhaustive search; smallest witness wins.
    for (std::uint64_t r = 0; r < f.characteristic(); ++r) {
      Scalar cand = f.integer(static_cast<long>(r));
      if (cand * cand == a)
        return cand;
    }
    return std::nullopt;
  }
  // a = m/n in lowest terms with n > 0 is a square iff m >= 0 and both m
  // and n are perfect integer squares.
  const mpq_class &v = a.value();
  if (sgn(v) < 0)
    return std::nullopt;
  const mpz_class &num = v.get_num();
  const mpz_class &den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class root(rn, rd);
  root.canonicalize();
  return Scalar(f, std::move(root));
}

bool Field::is_2_closed() const {
  if (kind_ == FieldKind::rationals)
    return false;
  for (std::uint64_t a = 1; a < p_; ++a)
    if (!is_square(integer(static_cast<long>(a))))
      return false;
  return true;
}

Scalar::Scalar(const Field &field, const mpq_class &value)
    : field_(field), value_(value) {
  value_.canonicalize();
  if (field_.kind_ == FieldKind::prime_field) {
    if (value_.get_den() != 1)
      throw MixedFieldsError("non-integral value for element of " +
                             field_.name());
    value_ = mpq_class(mod_p(value_.get_num(), field_.p_));
  }
}

void Scalar::require_same_field(const Scalar &a, const Scalar &b) {
  if (a.field_ != b.field_)
    throw MixedFieldsError("cannot combine elements of " + a.field_.name() +
                           " and " + b.field_.name());
}

Scalar Scalar::operator-() const {
  if (field_.kind_ == FieldKind::prime_field)
    return Scalar(field_, mpq_class(mod_p(-value_.get_num(), field_.p_)), 0);
  return Scalar(field_, mpq_class(-value_), 0);
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZeroError("inverse of zero in " + field_.name());
  if (field_.kind_ == FieldKind::prime_field) {
    mpz_class r, m(static_cast<unsigned long>(field_.p_));
    mpz_invert(r.get_mpz_t(), value_.get_num().get_mpz_t(), m.get_mpz_t());
    return Scalar(field_, mpq_class(r), 0);
  }
  return Scalar(field_, mpq_class(1) / value_, 0);
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
  require_same_field(*this, rhs);
  value_ += rhs.value_;
  if (field_.kind_ == FieldKind::prime_field)
    value_ = mpq_class(mod_p(value_.get_num(), field_.p_));
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
  require_same_field(*this, rhs);
  value_ -= rhs.value_;
  if (field_.kind_ == FieldKind::prime_field)
    value_ = mpq_class(mod_p(value_.get_num(), field_.p_));
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
  require_same_field(*this, rhs);
  value_ *= rhs.value_;
  if (field_.kind_ == FieldKind::prime_field)
    value_ = mpq_class(mod_p(value_.get_num(), field_.p_));
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
  require_same_field(*this, rhs);
  if (rhs.is_zero())
    throw DivisionByZeroError("division by zero in " + field_.name());
  return *this *= rhs.inverse();
}

std::string Scalar::str() const { return value_.get_str(); }

} // namespace leibniz
