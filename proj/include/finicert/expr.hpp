#pragma once

#include <string>

#include "finicert/polynomial.hpp"

namespace finicert {

/// Parses a polynomial expression over the ring's variables.
///
/// Grammar:
///   expression := ['-'] term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := atom ['^' natural]
///   atom       := rational | identifier | '(' expression ')'
///   rational   := digits ['/' digits]        (one token, no spaces)
///
/// There is no implicit multiplication: "2x" is an error, "2*x" is not.
/// Errors are reported as ParseError with 1-based line and column.
Polynomial parse_polynomial(const std::string& text, const RingContext& ring);

/// Canonical rendering: terms in the polynomial's storage order, "*"
/// between coefficient and variables, "^" for exponents, and " + " / " - "
/// between terms. parse_polynomial inverts it exactly.
std::string polynomial_to_string(const Polynomial& p, const RingContext& ring);

} // namespace finicert
