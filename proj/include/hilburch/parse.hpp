#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilburch/poly.hpp"

namespace hilburch {

/// Parses the polynomial grammar
///   poly  := term (('+'|'-') term)*
///   term  := coeff ('*'? mono)* | mono ('*'? mono)*
///   mono  := ('x'|'y') ('^' uint)?
///   coeff := int ('/' uint)?
/// with whitespace ignored and an optional sign on the first term.
/// Throws ParseError (with a character offset) on malformed input.
BiPoly parse_poly(std::string_view text, const Field& field);
/// Same grammar restricted to y.
YPoly parse_ypoly(std::string_view text, const Field& field);
/// Splits on ';' and parses each piece.
std::vector<BiPoly> parse_poly_list(std::string_view text, const Field& field);

/// Terms in descending lex order, '*' omitted, e.g. "x^3-2xy^2+1/2y".
std::string to_string(const BiPoly& f);
std::string to_string(const YPoly& f);

}  // namespace hilburch
