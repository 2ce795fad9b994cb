#pragma once

#include "susp/poly.hpp"

#include <string>

namespace susp {

// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*      division only by nonzero constants
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' integer)?
//   atom    := integer | identifier | '(' expr ')'
// Throws SyntaxError with a 1-based line/column, or Error(UnknownVariable).
MultiPoly parse_polynomial(const std::string& src, const RingPtr& ring);

}  // namespace susp
