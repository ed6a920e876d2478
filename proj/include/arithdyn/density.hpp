#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/multipoly.hpp"
#include "arithdyn/points.hpp"

namespace arithdyn {

/// Outcome of searching for an algebraic curve of bounded degree through a
/// point sample. "None" is a certificate: the evaluation matrix has full
/// column rank, shown either by a nonzero maximal minor modulo a prime
/// (exact: a nonzero minor mod p is a nonzero integer minor) or by exact
/// fraction-free elimination. A found curve is verified to vanish at every
/// sample point before it is returned.
struct CurveWitness {
  enum class Status { CurveFound, NoneCertified, Inconclusive } status;
  std::optional<MultiPoly> curve;  // canonical form, present iff CurveFound
  int degree_bound = 0;
  std::size_t monomial_count = 0;
  std::size_t points_used = 0;
  std::string certificate;  // how "none" was certified
};

/// Affine sample: curve candidates run over all monomials of total degree
/// at most D. Needs at least as many points as monomials for a meaningful
/// negative; fewer points give Inconclusive.
CurveWitness invariant_curve_search(const std::vector<AffinePoint>& points, int degree_bound,
                                    const VarListPtr& vars);

/// Projective sample: homogeneous curve candidates of degree exactly D.
CurveWitness invariant_curve_search(const std::vector<ProjPoint>& points, int degree_bound,
                                    const VarListPtr& vars);

}  // namespace arithdyn
