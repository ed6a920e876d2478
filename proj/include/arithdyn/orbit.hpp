#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/heights.hpp"
#include "arithdyn/maps.hpp"

namespace arithdyn {

/// An orbit segment with its heights. Points are iterated pointwise; maps
/// are never composed here (heights grow far slower than composed
/// coefficients would). `start_index` is the orbit index of points.front(),
/// 0 for forward orbits and -n_max for full orbits; estimators use it so a
/// record with its first points dropped keeps the original indexing.
struct OrbitRecord {
  std::string map_id;
  bool projective = false;
  std::vector<AffinePoint> affine_points;
  std::vector<ProjPoint> proj_points;
  std::vector<HeightValue> heights;  // parallel to the points
  int start_index = 0;
  enum class Direction { Forward, Backward, Full } direction = Direction::Forward;
  /// Orbit index n such that applying the map to points[n - start_index]
  /// lands in the indeterminacy locus; the record stops there.
  std::optional<int> indeterminacy_index;
  bool truncated = false;  // the coordinate-digit cap stopped the record

  std::size_t size() const {
    return projective ? proj_points.size() : affine_points.size();
  }
  int index_of(std::size_t position) const { return start_index + static_cast<int>(position); }

  /// Same orbit with the first k points dropped; start_index advances so
  /// estimators keep absolute indices.
  OrbitRecord drop_prefix(std::size_t k) const;
};

struct OrbitOptions {
  std::int64_t coordinate_digit_cap = 1000000;
};

OrbitRecord forward_orbit(const AffinePolyMap& f, const AffinePoint& start, int n_max,
                          const OrbitOptions& options = {}, const std::string& map_id = "map");
OrbitRecord forward_orbit(const ProjRationalMap& f, const ProjPoint& start, int n_max,
                          const OrbitOptions& options = {}, const std::string& map_id = "map");

/// Indices -n_max..n_max. Requires inverse_check(f, f_inverse).
OrbitRecord full_orbit(const AffinePolyMap& f, const AffinePolyMap& f_inverse,
                       const AffinePoint& start, int n_max, const OrbitOptions& options = {},
                       const std::string& map_id = "map");

struct PeriodicityResult {
  int preperiod = 0;  // first index (relative to the record) entering the cycle
  int period = 0;     // minimal period of the repeating tail
};

/// Exact canonical-form comparison along the record; nullopt when no repeat
/// occurs within the scanned range.
std::optional<PeriodicityResult> detect_periodicity(const OrbitRecord& rec);

}  // namespace arithdyn
