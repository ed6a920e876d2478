#include "arithdyn/heights.hpp"

#include <cmath>

#include "arithdyn/error.hpp"

namespace arithdyn {

HeightValue weil_height(const ProjPoint& p) {
  Integer m = p.max_abs_coord();
  // Canonical points have a nonzero coordinate, so m >= 1.
  return HeightValue{m, log_abs(m)};
}

HeightValue weil_height(const AffinePoint& p) { return weil_height(projective_closure(p)); }

HeightValue h_plus(const HeightValue& h) {
  return HeightValue{h.max_abs_coord, std::max(h.log_value, 1.0)};
}

HeightValue h_plus(const ProjPoint& p) { return h_plus(weil_height(p)); }

HeightBound HeightBound::from_max_coord(Integer m) {
  if (m < 0) m = 0;
  const double lg = m >= 1 ? log_abs(m) : -1.0;
  return HeightBound{std::move(m), lg};
}

HeightBound HeightBound::from_log(double b) {
  if (b < 0.0) return HeightBound{Integer(0), b};
  if (b > 42.0) {
    fail(ErrorKind::Resource, "height bound too large to enumerate");
  }
  long m = static_cast<long>(std::floor(std::exp(b)));
  // Self-consistent fix-up: M is the largest integer whose double log is
  // within the bound, matching how weil_height reports logs.
  while (m >= 1 && std::log(static_cast<double>(m)) > b) --m;
  while (std::log(static_cast<double>(m + 1)) <= b) ++m;
  return HeightBound{Integer(m), b};
}

}  // namespace arithdyn
