#pragma once

#include <string_view>

#include "foliate/rational_function.hpp"

namespace foliate::cli {

/// Parses an expression over `vars`. Division is allowed and yields a
/// normalized rational function. `i` denotes the imaginary unit.
RationalFunction parse_rational(std::string_view text, const VarList& vars);

/// As parse_rational, but the result must reduce to a polynomial
/// (DivisionNotRational otherwise).
MultiPoly parse_polynomial(std::string_view text, const VarList& vars);

}  // namespace foliate::cli
