#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/enumerate.hpp"
#include "arithdyn/heights.hpp"
#include "arithdyn/maps.hpp"

namespace arithdyn {

enum class PointFate { Periodic, PreperiodicWithinScan, Escaping, Undecided };

struct SurveyEntry {
  AffinePoint point;
  PointFate fate;
  int period = 0;     // for Periodic and PreperiodicWithinScan
  int preperiod = 0;  // for PreperiodicWithinScan
  HeightValue height;
};

struct SurveyOptions {
  Integer enumeration_cap = Integer(20000000);  // tuples the walker may visit
  std::int64_t coordinate_digit_cap = 10000;
};

/// Classification of every rational point of height within the bound under
/// T-step exact iteration. A point is Periodic when some f^t returns it
/// exactly (t <= T, minimal t reported); PreperiodicWithinScan when the
/// scan repeats without returning to the start; Escaping when no repeat
/// occurred and some closure height passed exp(2B+1); Undecided otherwise.
/// The escape label is assigned after the full scan, never used to cut it
/// short, so a periodic orbit passing through large intermediate points is
/// still detected. When an inverse is supplied, Undecided points whose
/// backward orbit passes the threshold are labeled Escaping as well.
struct SurveyReport {
  HeightBound bound;
  int period_bound = 0;
  Integer escape_threshold;  // floor(exp(2B+1)) as an exact integer
  std::size_t points_scanned = 0;
  std::size_t periodic_count = 0;
  std::size_t preperiodic_count = 0;
  std::size_t escaping_count = 0;
  std::size_t undecided_count = 0;
  std::vector<SurveyEntry> periodic;  // every periodic point found
  std::optional<HeightValue> max_periodic_height;
};

SurveyReport periodic_point_survey(const AffinePolyMap& f,
                                   const std::optional<AffinePolyMap>& f_inverse,
                                   const HeightBound& bound, int period_bound,
                                   const SurveyOptions& options = {});

}  // namespace arithdyn
