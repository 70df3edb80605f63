#pragma once

#include <string_view>

#include "dynseq/ratmap.hpp"

namespace dynseq {

// Grammar (no implicit multiplication; '^' binds tighter than unary minus):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | base ('^' ['-'] integer)?
//   base   := integer | symbol | '(' expr ')'
// Symbols are the ring variables and the field generator. Failures throw
// Error(Parse) whose index is the byte offset of the offending token.
RatFunc parse_expression(std::string_view text, const RingPtr& ring);
// Same grammar without variables.
FieldElement parse_constant(std::string_view text, const FieldPtr& field);
// Throws InvalidArgument when the expression has a nontrivial denominator.
MultiPoly parse_polynomial(std::string_view text, const RingPtr& ring);
// Univariate polynomial over Q in `var`.
UPoly parse_upoly(std::string_view text, const std::string& var);

}  // namespace dynseq
