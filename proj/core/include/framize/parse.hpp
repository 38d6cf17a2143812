#pragma once

#include <stdexcept>
#include <string>

#include "framize/element.hpp"

namespace framize {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " (column " + std::to_string(column + 1) + ")"),
        column(column) {}
  std::size_t column;
};

/// Grammar (whitespace insensitive):
///   element := ['-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := INT | NAME | '(' element ')' | factor '^' ['-'] INT
/// NAME resolves to a generator letter (g1, G1, h2, t3, tau1, T, Tinv), an
/// e-projector token (e1 .. e(n-1), expanded on the spot), the reserved y0
/// (replaced by its l,m-value), or an indeterminate of the field.  '^' on a
/// framing letter reduces modulo d (negative allowed); on other letters it
/// repeats the letter (positive only); on scalar-valued factors it is a field
/// power.  '/' requires a scalar-valued divisor.
Element parse_element(const std::string& src, const FieldPtr& field, Context ctx);

/// Scalar expression; rejects any generator letter.
Scalar parse_scalar(const std::string& src, const FieldPtr& field);

/// Scalar expression in which the reserved token y0 may appear; y0 is
/// replaced by 1 + (l^{-1} - l)/m and the result is canonical.
Scalar substitute_y0(const std::string& src, const FieldPtr& field);

/// Word in `*`-concatenated letter syntax (no scalars, no sums).
Word parse_word(const std::string& src, const FieldPtr& field, Context ctx);

}  // namespace framize
