#pragma once

#include <optional>
#include <vector>

#include "arithdyn/multipoly.hpp"

namespace arithdyn {

/// Greatest common divisor over the rationals, returned primitive: integer
/// coefficients with content 1 and positive graded-lex leading coefficient.
/// gcd(p, 0) is the primitive part of p; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

/// Folds poly_gcd over a list, stopping early once the gcd is constant.
MultiPoly poly_gcd_list(const std::vector<MultiPoly>& polys);

/// Exact quotient p / d, or nullopt when d does not divide p.
std::optional<MultiPoly> poly_divide_exact(const MultiPoly& p, const MultiPoly& d);

}  // namespace arithdyn
