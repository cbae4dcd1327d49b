#pragma once

#include <string_view>

#include "fermat/cyclotomic.hpp"
#include "fermat/poly.hpp"

namespace fermat {

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*        division only by constants
//   factor := atom ['^' integer]
//   atom   := integer | variable | z_n | '(' expr ')'
// `z_n` is a primitive n-th root of unity. Canonical output from str() parses back
// to the identical polynomial.

QPoly parse_qpoly(std::string_view text, const RingPtr& ring);
/// `z_k` is accepted when k divides the ring's conductor.
CPoly parse_cpoly(std::string_view text, const RingPtr& ring);

CycloNumber parse_cyclo(std::string_view text, const CycloFieldPtr& field);
/// Conductor inferred as the lcm of every `z_k` mentioned (1 when none).
CycloNumber parse_cyclo(std::string_view text);

/// lcm of the k in every `z_k` token of the text; 1 when there are none.
int conductor_mentioned(std::string_view text);

}  // namespace fermat
