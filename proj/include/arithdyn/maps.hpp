#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/multipoly.hpp"
#include "arithdyn/points.hpp"

namespace arithdyn {

/// Polynomial self-map of affine N-space: N components in N variables.
class AffinePolyMap {
 public:
  explicit AffinePolyMap(std::vector<MultiPoly> components);

  std::size_t dimension() const { return comps_.size(); }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const VarListPtr& vars() const { return comps_.front().vars(); }

  AffinePoint evaluate(const AffinePoint& p) const;
  /// this after other: (f.compose(g))(x) = f(g(x)).
  AffinePolyMap compose(const AffinePolyMap& other) const;
  std::int64_t max_degree() const;
  bool is_identity() const;

  /// Exponent matrix when every component is a single monomial with nonzero
  /// coefficient; row i gives the exponents of component i.
  std::optional<std::vector<std::vector<std::int64_t>>> monomial_matrix() const;

  bool operator==(const AffinePolyMap& rhs) const { return comps_ == rhs.comps_; }

 private:
  std::vector<MultiPoly> comps_;
};

/// Rational self-map of P^N: N+1 homogeneous components of one common
/// degree, saturated (coprime tuple) and in canonical form: all-integer
/// coefficients of joint content 1, first nonzero component with positive
/// graded-lex leading coefficient. Canonical form makes equality of maps
/// plain tuple equality.
class ProjRationalMap {
 public:
  /// Divides out the common factor of a homogeneous tuple and normalizes.
  /// This is the saturation step that keeps composed degrees honest.
  static ProjRationalMap saturate(std::vector<MultiPoly> components);

  std::size_t dimension() const { return comps_.size() - 1; }
  std::int64_t degree() const { return degree_; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const VarListPtr& vars() const { return comps_.front().vars(); }

  ProjRationalMap compose(const ProjRationalMap& other) const;
  ProjRationalMap iterate(std::int64_t n) const;

  /// Evaluation at a point; nullopt is Indeterminate (all components
  /// vanish, the point lies in the indeterminacy locus).
  std::optional<ProjPoint> evaluate(const ProjPoint& p) const;

  bool is_identity() const;
  static ProjRationalMap identity(VarListPtr vars);

  bool operator==(const ProjRationalMap& rhs) const { return comps_ == rhs.comps_; }

 private:
  ProjRationalMap() = default;
  std::vector<MultiPoly> comps_;
  std::int64_t degree_ = 0;
};

/// Extension of an affine polynomial map to projective space: components
/// homogenized to the maximal component degree d, with an extra component
/// homogenizer^d. The homogenizing variable is appended last; its name is
/// chosen canonically from the affine names, so affine/projective
/// round-trips are deterministic. Constant maps are rejected.
ProjRationalMap homogenize(const AffinePolyMap& f);

/// Variable list the homogenization of maps over `affine_vars` will use.
VarListPtr homogenized_vars(const VarList& affine_vars);

/// True when g is a two-sided inverse of f as exact polynomial tuples.
bool inverse_check(const AffinePolyMap& f, const AffinePolyMap& g);
/// Projective version: both saturated compositions equal the identity map.
bool inverse_check(const ProjRationalMap& f, const ProjRationalMap& g);

}  // namespace arithdyn
