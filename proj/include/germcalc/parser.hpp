#pragma once

#include <string_view>
#include <vector>

#include "germcalc/polynomial.hpp"

namespace germcalc {

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | ident | '(' expr ')'
/// Whitespace is insignificant; there is no implicit multiplication.
/// Throws ParseError (syntax, unknown variable, coefficient not in field).
Polynomial parsePolynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated list of expressions; an all-blank input yields no items.
std::vector<Polynomial> parsePolynomialList(std::string_view text, const RingPtr& ring);

}  // namespace germcalc
