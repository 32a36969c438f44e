#pragma once

#include <string>
#include <string_view>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Parses the line-oriented algebra definition format:
///
///   # comment
///   field Q            | field GF <p>
///   dim <n>
///   basis <name1> ... <namen>        (optional; defaults e1..en)
///   [<ni>,<nj>] = <term> (+ <term>)*
///
/// where a term is `<scalar>*<name>` or `<name>` and scalars follow the
/// field's literal syntax.  Unlisted brackets are zero; assigning the same
/// (i, j) twice is an error.  Throws ParseError (with line number) on
/// malformed input and IdentityViolationError when the resulting table is
/// not a left Leibniz algebra.
LeibnizAlgebra parse_algebra(std::string_view text);

/// Parses without verifying the Leibniz identity, for callers that report
/// identity failures instead of aborting on them.
LeibnizAlgebra parse_algebra_unchecked(std::string_view text);

/// Reads and parses a file; file-access problems surface as ParseError.
LeibnizAlgebra parse_algebra_file(const std::string &path);

/// Reads a file into memory, reporting access problems as ParseError.
std::string read_text_file(const std::string &path);

/// Canonical text form of an algebra; parse_algebra(serialize_algebra(a))
/// reproduces a exactly.
std::string serialize_algebra(const LeibnizAlgebra &algebra);

/// Renders a coordinate vector against basis names, e.g. "a1 + 2*a3" or
/// "0" for the zero vector.
std::string format_combination(const Vec &v,
                               const std::vector<std::string> &names);

} // namespace leibniz
