#include "arithdyn/arith_degree.hpp"

#include <algorithm>
#include <cmath>

#include "arithdyn/error.hpp"

namespace arithdyn {

ArithDegreeEstimate estimate_arith_degree(const OrbitRecord& rec, int tail_window) {
  if (rec.indeterminacy_index) {
    fail(ErrorKind::Parameter, "orbit hit the indeterminacy locus; estimate undefined");
  }
  const std::size_t count = rec.size();
  if (tail_window < 0) fail(ErrorKind::Parameter, "tail window must be nonnegative");
  if (count < static_cast<std::size_t>(std::max(tail_window, 1)) + 2) {
    fail(ErrorKind::Parameter, "orbit too short for the requested tail window");
  }

  ArithDegreeEstimate est;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = rec.index_of(i);
    if (n < 1) continue;
    const double hp = std::max(rec.heights[i].log_value, 1.0);
    est.root_index.push_back(n);
    est.roots.push_back(std::pow(hp, 1.0 / n));
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double hn = rec.heights[i].log_value;
    if (hn > 0.0) {
      est.ratio_index.push_back(rec.index_of(i));
      est.ratios.push_back(rec.heights[i + 1].log_value / hn);
    }
  }
  if (est.roots.empty()) {
    fail(ErrorKind::Parameter, "orbit has no positive indices to estimate from");
  }

  const std::size_t w = tail_window > 0
                            ? static_cast<std::size_t>(tail_window)
                            : (est.roots.size() + 2) / 3;
  const std::size_t tail = std::min(w, est.roots.size());
  est.tail_begin = est.root_index[est.roots.size() - tail];
  est.tail_end = est.root_index.back();
  est.lower_report = est.upper_report = est.roots[est.roots.size() - tail];
  for (std::size_t i = est.roots.size() - tail; i < est.roots.size(); ++i) {
    est.lower_report = std::min(est.lower_report, est.roots[i]);
    est.upper_report = std::max(est.upper_report, est.roots[i]);
  }
  if (!est.ratios.empty()) {
    const std::size_t rt = std::min(tail, est.ratios.size());
    est.ratio_tail_min = est.ratio_tail_max = est.ratios[est.ratios.size() - rt];
    for (std::size_t i = est.ratios.size() - rt; i < est.ratios.size(); ++i) {
      est.ratio_tail_min = std::min(est.ratio_tail_min, est.ratios[i]);
      est.ratio_tail_max = std::max(est.ratio_tail_max, est.ratios[i]);
    }
  }

  // Periodic orbits have bounded heights: the limit is exactly 1.
  if (detect_periodicity(rec)) est.alpha_exact = 1.0;
  return est;
}

PowerConsistencyReport power_consistency_check(const AffinePolyMap& f, const AffinePoint& start,
                                               int n, int scan, const OrbitOptions& options,
                                               int tail_window) {
  if (n < 2) fail(ErrorKind::Parameter, "power consistency needs n >= 2");
  if (scan < 3) fail(ErrorKind::Parameter, "power consistency needs scan >= 3");

  OrbitRecord base_rec = forward_orbit(f, start, n * scan, options, "f");
  if (base_rec.truncated) {
    fail(ErrorKind::Resource, "orbit truncated by the coordinate cap before the scan finished");
  }

  // Point-iterated orbit of f^n: subsample every n-th point.
  OrbitRecord powered;
  powered.map_id = "f^" + std::to_string(n);
  powered.projective = base_rec.projective;
  for (std::size_t i = 0; i < base_rec.size(); i += n) {
    powered.affine_points.push_back(base_rec.affine_points[i]);
    powered.heights.push_back(base_rec.heights[i]);
  }

  PowerConsistencyReport rep;
  rep.n = n;
  rep.base = estimate_arith_degree(base_rec, tail_window);
  rep.powered = estimate_arith_degree(powered, tail_window);

  auto midpoint = [](double lo, double hi) { return std::sqrt(lo * hi); };
  const bool base_has_ratio = !rep.base.ratios.empty() && rep.base.ratio_tail_min > 0.0;
  rep.base_ratio = base_has_ratio ? midpoint(rep.base.ratio_tail_min, rep.base.ratio_tail_max) : 1.0;
  rep.powered_ratio = !rep.powered.ratios.empty() && rep.powered.ratio_tail_min > 0.0
                          ? midpoint(rep.powered.ratio_tail_min, rep.powered.ratio_tail_max)
                          : 1.0;
  if (rep.base.alpha_exact) rep.base_ratio = *rep.base.alpha_exact;
  if (rep.powered.alpha_exact) rep.powered_ratio = *rep.powered.alpha_exact;
  rep.expected = std::pow(rep.base_ratio, n);
  rep.relative_discrepancy =
      std::fabs(rep.powered_ratio - rep.expected) / std::max(rep.expected, 1e-300);
  return rep;
}

}  // namespace arithdyn
