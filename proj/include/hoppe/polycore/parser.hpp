#pragma once

#include <string_view>

#include "hoppe/polycore/polynomial.hpp"

namespace hoppe {

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | ident | '(' expr ')'
// Identifiers are maximal runs of [a-z0-9] starting with a letter and must
// name an ambient variable. A leading '-' is accepted so that rendered
// polynomials with a negative first term read back.
RationalPolynomial parse_poly(std::string_view text, const Ambient& ambient);

}  // namespace hoppe
