#pragma once

#include "arithdyn/points.hpp"

namespace arithdyn {

/// Height carried in dual form: the exact max coordinate keeps comparisons
/// drift-free, the float log is for reporting and estimators.
struct HeightValue {
  Integer max_abs_coord;  // >= 1
  double log_value;       // natural log of max_abs_coord

  bool operator==(const HeightValue& rhs) const { return max_abs_coord == rhs.max_abs_coord; }
};

/// Logarithmic Weil height of a normalized projective rational point:
/// log of the maximal absolute coordinate.
HeightValue weil_height(const ProjPoint& p);

/// Height of an affine point, through its projective closure.
HeightValue weil_height(const AffinePoint& p);

/// max(h, 1) with the exact coordinate preserved.
HeightValue h_plus(const HeightValue& h);
HeightValue h_plus(const ProjPoint& p);

/// A height bound in dual form. The exact integer bound on the maximal
/// coordinate is what enumeration and the survey compare against.
struct HeightBound {
  Integer max_coord;  // points with max|coord| <= max_coord qualify
  double log_value;

  static HeightBound from_max_coord(Integer m);
  /// Largest integer M with log(M) <= b under double evaluation; negative
  /// bounds give max_coord 0 (the empty set).
  static HeightBound from_log(double b);
};

}  // namespace arithdyn
