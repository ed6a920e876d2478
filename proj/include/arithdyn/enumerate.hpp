#pragma once

#include <functional>
#include <vector>

#include "arithdyn/heights.hpp"
#include "arithdyn/points.hpp"

namespace arithdyn {

/// Visits every canonical point of P^N with max|coordinate| <= bound,
/// each exactly once, in a deterministic order: ascending by the exact max
/// coordinate, then lexicographic on the canonical integer tuple. The
/// visitor returns false to stop early. Finiteness of each run is the
/// Northcott property made concrete: the shells are finite.
void enumerate_projective(std::size_t dimension_n, const Integer& bound,
                          const std::function<bool(const ProjPoint&)>& visit);

/// Affine points of A^N of closure height within the bound: projective
/// points with nonzero last coordinate, in the same deterministic order.
void enumerate_affine(std::size_t dimension_n, const Integer& bound,
                      const std::function<bool(const AffinePoint&)>& visit);

/// Materialized variants, mostly for tests and the CLI.
std::vector<ProjPoint> bounded_height_projective(std::size_t dimension_n, const HeightBound& b);
std::vector<AffinePoint> bounded_height_affine(std::size_t dimension_n, const HeightBound& b);

/// Upper bound on the number of tuples a full enumeration would visit;
/// used for cap checks before a survey starts.
Integer enumeration_tuple_bound(std::size_t dimension_n, const Integer& bound);

}  // namespace arithdyn
