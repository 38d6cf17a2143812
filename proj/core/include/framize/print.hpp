#pragma once

#include <string>

#include "framize/element.hpp"

namespace framize {

/// Canonical text for a polynomial: terms descending in the monomial order,
/// `*` between factors, `^` for powers.
std::string poly_to_string(const Poly& p);

/// Canonical text for a scalar: numerator, then "/denominator" when the
/// denominator is not one, each side parenthesized as needed so that the
/// result reparses to the same value.
std::string scalar_to_string(const Scalar& s);

/// Canonical text for an element: terms joined by " + " / " - ", sorted
/// descending under `order`; coefficients one are dropped, the unit word is
/// rendered as the bare coefficient.  parse_element inverts this exactly.
std::string element_to_string(const Element& e, const TermOrder& order = TermOrder());

}  // namespace framize
