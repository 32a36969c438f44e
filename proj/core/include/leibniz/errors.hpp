#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division by the zero element of a field.
class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

/// Two scalars from different fields were combined.
class MixedFieldsError : public Error {
public:
  using Error::Error;
};

/// Operands have incompatible dimensions, fields or ambient spaces.
class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

/// A vector expected to lie in a given span does not.  For derivation
/// algebras this signals a closure violation and is a fatal
/// internal-consistency failure, not a user error.
class NotInSpanError : public Error {
public:
  using Error::Error;
};

/// An exhaustive enumeration was requested over a space larger than the
/// configured budget.
class SearchSpaceTooLargeError : public Error {
public:
  using Error::Error;
};

/// The parameter of a catalog algebra family must be nonzero.
class LambdaZeroError : public Error {
public:
  using Error::Error;
};

/// Malformed algebra-definition text.  `line` is 1-based; 0 means the
/// error is not tied to a specific line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A structure-constant table violates the left Leibniz identity.
/// `triple` holds the 0-based basis indices (i, j, k) of the first
/// failing instance in lexicographic order.
class IdentityViolationError : public Error {
public:
  IdentityViolationError(std::array<std::size_t, 3> triple,
                         const std::string &message)
      : Error(message), triple_(triple) {}

  const std::array<std::size_t, 3> &triple() const noexcept { return triple_; }

private:
  std::array<std::size_t, 3> triple_;
};

} // namespace leibniz
