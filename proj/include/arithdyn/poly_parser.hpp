#pragma once

#include <string>

#include "arithdyn/multipoly.hpp"

namespace arithdyn {

/// Parses polynomial text like "3/2*x^2*y - z + 1" over the given variables.
///
/// Grammar: variables are identifiers, `^` takes a nonnegative integer
/// exponent, `*` may be omitted between a coefficient and a variable or
/// before `(`. `+ - * / ^ ( )` are the operators; `/` needs a nonzero
/// constant divisor. Whitespace is ignored. Errors carry line and column.
MultiPoly parse_poly(const std::string& text, const VarListPtr& vars);

}  // namespace arithdyn
