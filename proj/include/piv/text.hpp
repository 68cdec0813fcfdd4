#pragma once

#include "piv/ncpoly.hpp"

#include <string>

namespace piv {

/// Grammar:
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := [coeff '*'] factor ('*' factor)* | coeff
///   coeff := integer | integer '/' integer
///   factor:= var | comm
///   comm  := '[' poly (',' poly)+ ']'
///   var   := 'x' positive-integer
/// Whitespace is insignificant. Errors carry the character position.
NCPoly parse_poly(const std::string& text);

/// Monomial form, lexicographic word order, rational coefficients in lowest
/// terms. parse_poly(format_poly(f)) == f.
std::string format_poly(const NCPoly& f);

/// Scales by a positive rational so coefficients are coprime integers.
/// The sign of the first (lexicographically least) monomial is preserved.
NCPoly primitive_integer_scale(const NCPoly& f);

}  // namespace piv
