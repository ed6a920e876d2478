#pragma once

#include <optional>
#include <vector>

#include "arithdyn/orbit.hpp"

namespace arithdyn {

/// Arithmetic-degree estimators along an orbit: the root sequence
/// hplus(f^n P)^(1/n) and the ratio sequence h(f^(n+1) P)/h(f^n P),
/// with min/max reports over a configurable tail window. Indices are
/// absolute orbit indices, so a record with a dropped prefix reports the
/// same values on the same tail.
struct ArithDegreeEstimate {
  std::vector<int> root_index;    // absolute n for each root, n >= 1
  std::vector<double> roots;      // hplus(h_n)^(1/n)
  std::vector<int> ratio_index;   // absolute n of each ratio's denominator
  std::vector<double> ratios;     // h_(n+1) / h_n, only where h_n > 0
  int tail_begin = 0, tail_end = 0;  // absolute root indices of the window
  double lower_report = 0.0;      // min of roots over the tail
  double upper_report = 0.0;      // max of roots over the tail
  double ratio_tail_min = 0.0, ratio_tail_max = 0.0;
  std::optional<double> alpha_exact;  // 1.0 for periodic records
};

/// tail_window = 0 picks the default: the last ceil(count/3) entries.
ArithDegreeEstimate estimate_arith_degree(const OrbitRecord& rec, int tail_window = 0);

/// Compares the tail estimate for the orbit under the n-th power of the map
/// (point-iterated, subsampled every n steps) against the n-th power of the
/// estimate under the map itself.
struct PowerConsistencyReport {
  int n = 0;
  ArithDegreeEstimate base;     // under f, scan*n steps
  ArithDegreeEstimate powered;  // under f^n, scan steps
  double base_ratio = 0.0;      // geometric midpoint of the base ratio tail
  double powered_ratio = 0.0;
  double expected = 0.0;        // base_ratio^n
  double relative_discrepancy = 0.0;
};

PowerConsistencyReport power_consistency_check(const AffinePolyMap& f, const AffinePoint& start,
                                               int n, int scan, const OrbitOptions& options = {},
                                               int tail_window = 0);

}  // namespace arithdyn
