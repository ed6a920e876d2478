#pragma once

#include <optional>
#include <vector>

#include "arithdyn/orbit.hpp"

namespace arithdyn {

struct ArithProgression {
  int start = 0;
  int difference = 0;  // strictly positive
};

/// The return set {n >= 1 : f^n(P) lies on Y} over a finite scan, together
/// with a decomposition into arithmetic progressions plus a finite residual
/// when the membership indicator is eventually periodic within the scan.
struct ReturnSet {
  std::vector<int> indices;  // ascending, within [1, scanned_up_to]
  int n_max = 0;
  int scanned_up_to = 0;     // < n_max when the scan was cut short
  bool partial = false;      // indeterminacy or a cap cut the scan

  struct Decomposition {
    std::vector<ArithProgression> progressions;
    std::vector<int> residual;
  };
  /// Absent when no eventual period is visible in the scanned range.
  std::optional<Decomposition> decomposition;
};

/// Membership is the exact simultaneous vanishing of every polynomial in
/// subvariety_polys at the orbit point.
ReturnSet return_set(const AffinePolyMap& f, const AffinePoint& start,
                     const std::vector<MultiPoly>& subvariety_polys, int n_max,
                     const OrbitOptions& options = {});

/// Replays a decomposition over [1, n_max]; used to verify exactness.
std::vector<int> decomposition_replay(const ReturnSet::Decomposition& dec, int n_max);

}  // namespace arithdyn
