#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Projective point with the canonical representative: coprime integer
/// coordinates, not all zero, first nonzero coordinate positive.
class ProjPoint {
 public:
  static ProjPoint from_integers(std::vector<Integer> coords);
  static ProjPoint from_rationals(const std::vector<Rational>& coords);

  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  /// Projective dimension N (coordinate count minus one).
  std::size_t dimension() const { return coords_.size() - 1; }

  Integer max_abs_coord() const;

  bool operator==(const ProjPoint& rhs) const { return coords_ == rhs.coords_; }
  bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }
  bool operator<(const ProjPoint& rhs) const { return coords_ < rhs.coords_; }

  /// "[a0:a1:...:aN]"
  std::string to_string() const;
  static ProjPoint parse(const std::string& text);

 private:
  ProjPoint() = default;
  std::vector<Integer> coords_;
};

/// Affine point with exact rational coordinates.
class AffinePoint {
 public:
  explicit AffinePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }

  bool operator==(const AffinePoint& rhs) const { return coords_ == rhs.coords_; }
  bool operator!=(const AffinePoint& rhs) const { return !(*this == rhs); }
  bool operator<(const AffinePoint& rhs) const;

  /// "(r1, ..., rN)" with rationals as "p/q".
  std::string to_string() const;
  static AffinePoint parse(const std::string& text);

 private:
  std::vector<Rational> coords_;
};

/// Canonical projective representative of a rational coordinate tuple:
/// denominators cleared by the lcm, divided by the gcd, sign fixed.
/// Rejects the all-zero tuple.
inline ProjPoint normalize(const std::vector<Rational>& raw) {
  return ProjPoint::from_rationals(raw);
}

/// Projective closure of an affine point: last coordinate 1, normalized.
ProjPoint projective_closure(const AffinePoint& p);

/// Affine chart at the last coordinate; nullopt when the point is at
/// infinity (last coordinate zero).
std::optional<AffinePoint> affine_chart(const ProjPoint& p);

}  // namespace arithdyn
