#include "arithdyn/survey.hpp"

#include <algorithm>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

// floor(M^2 * e) with e to 18 places; exact integer arithmetic so the
// escape comparison is deterministic.
Integer escape_threshold_for(const Integer& max_coord) {
  static const Integer kENum("2718281828459045235");
  static const Integer kEDen("1000000000000000000");
  return max_coord * max_coord * kENum / kEDen;
}

}  // namespace

SurveyReport periodic_point_survey(const AffinePolyMap& f,
                                   const std::optional<AffinePolyMap>& f_inverse,
                                   const HeightBound& bound, int period_bound,
                                   const SurveyOptions& options) {
  if (period_bound < 1) fail(ErrorKind::Parameter, "period bound must be at least 1");
  if (bound.max_coord < 0) fail(ErrorKind::Parameter, "height bound must be nonnegative");
  if (f_inverse && !inverse_check(f, *f_inverse)) {
    fail(ErrorKind::Parameter, "provided inverse fails the inverse check");
  }

  const Integer tuple_bound = enumeration_tuple_bound(f.dimension(), bound.max_coord);
  if (tuple_bound > options.enumeration_cap) {
    fail(ErrorKind::Resource,
         "enumeration would visit about " + tuple_bound.get_str() +
             " tuples, over the cap of " + options.enumeration_cap.get_str() +
             "; lower the height bound or raise the cap");
  }

  SurveyReport rep;
  rep.bound = bound;
  rep.period_bound = period_bound;
  rep.escape_threshold = escape_threshold_for(bound.max_coord);

  const int T = period_bound;
  std::vector<AffinePoint> scan;
  scan.reserve(T + 1);

  enumerate_affine(f.dimension(), bound.max_coord, [&](const AffinePoint& start) {
    ++rep.points_scanned;
    scan.clear();
    scan.push_back(start);

    int period = 0;
    int preperiod = -1;
    bool escaped = false;
    bool capped = false;
    for (int t = 1; t <= T; ++t) {
      AffinePoint next = f.evaluate(scan.back());
      if (next == start) {
        period = t;
        break;
      }
      // Exact repeat elsewhere: preperiodic within the scan.
      for (std::size_t i = 1; i < scan.size(); ++i) {
        if (scan[i] == next) {
          preperiod = static_cast<int>(i);
          period = static_cast<int>(scan.size() - i);
          break;
        }
      }
      if (preperiod >= 0) break;
      const ProjPoint closure = projective_closure(next);
      const Integer mc = closure.max_abs_coord();
      if (mc > rep.escape_threshold) escaped = true;
      if (static_cast<std::int64_t>(decimal_digits(mc)) > options.coordinate_digit_cap) {
        capped = true;
        escaped = true;  // far beyond the escape threshold already
        break;
      }
      scan.push_back(std::move(next));
    }

    if (period > 0 && preperiod < 0) {
      ++rep.periodic_count;
      SurveyEntry e{start, PointFate::Periodic, period, 0, weil_height(start)};
      if (!rep.max_periodic_height || e.height.max_abs_coord > rep.max_periodic_height->max_abs_coord) {
        rep.max_periodic_height = e.height;
      }
      rep.periodic.push_back(std::move(e));
    } else if (preperiod >= 0) {
      ++rep.preperiodic_count;
    } else if (escaped || capped) {
      ++rep.escaping_count;
    } else {
      bool backward_escape = false;
      if (f_inverse) {
        AffinePoint q = start;
        for (int t = 1; t <= T; ++t) {
          q = f_inverse->evaluate(q);
          const Integer mc = projective_closure(q).max_abs_coord();
          if (mc > rep.escape_threshold) {
            backward_escape = true;
            break;
          }
          if (static_cast<std::int64_t>(decimal_digits(mc)) > options.coordinate_digit_cap) {
            backward_escape = true;
            break;
          }
        }
      }
      if (backward_escape) {
        ++rep.escaping_count;
      } else {
        ++rep.undecided_count;
      }
    }
    return true;
  });

  return rep;
}

}  // namespace arithdyn
