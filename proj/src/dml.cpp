#include "arithdyn/dml.hpp"

#include <algorithm>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

// Eventual-period detection on the indicator string s[1..len]: the smallest
// period pi, with the smallest start t for that pi, such that s[i] = s[i+pi]
// for all i in [t, len-pi] and at least two full periods are visible.
struct EventualPeriod {
  int start;
  int period;
};

std::optional<EventualPeriod> find_eventual_period(const std::vector<bool>& s, int len) {
  for (int pi = 1; 2 * pi <= len; ++pi) {
    int bad = 0;  // largest i with s[i] != s[i+pi]
    for (int i = len - pi; i >= 1; --i) {
      if (s[i] != s[i + pi]) {
        bad = i;
        break;
      }
    }
    const int t = bad + 1;
    // Demand two full periods of evidence inside the scan.
    if (len - pi - t + 1 >= pi) {
      return EventualPeriod{t, pi};
    }
  }
  return std::nullopt;
}

}  // namespace

ReturnSet return_set(const AffinePolyMap& f, const AffinePoint& start,
                     const std::vector<MultiPoly>& subvariety_polys, int n_max,
                     const OrbitOptions& options) {
  if (n_max < 1) fail(ErrorKind::Parameter, "return set needs n_max >= 1");
  if (subvariety_polys.empty()) {
    fail(ErrorKind::Parameter, "return set needs at least one subvariety polynomial");
  }
  for (const auto& y : subvariety_polys) {
    if (y.var_count() != f.dimension()) {
      fail(ErrorKind::Structural, "subvariety polynomials must use the map's variables");
    }
  }

  OrbitRecord rec = forward_orbit(f, start, n_max, options, "dml");

  ReturnSet rs;
  rs.n_max = n_max;
  rs.scanned_up_to = static_cast<int>(rec.size()) - 1;
  rs.partial = rec.truncated || rec.indeterminacy_index.has_value();

  std::vector<bool> member(rs.scanned_up_to + 1, false);
  for (int n = 1; n <= rs.scanned_up_to; ++n) {
    bool all_vanish = true;
    for (const auto& y : subvariety_polys) {
      if (y.eval(rec.affine_points[n].coords()) != 0) {
        all_vanish = false;
        break;
      }
    }
    member[n] = all_vanish;
    if (all_vanish) rs.indices.push_back(n);
  }

  if (auto ep = find_eventual_period(member, rs.scanned_up_to)) {
    ReturnSet::Decomposition dec;
    for (int n = 1; n < ep->start; ++n) {
      if (member[n]) dec.residual.push_back(n);
    }
    for (int r = ep->start; r < ep->start + ep->period; ++r) {
      if (r <= rs.scanned_up_to && member[r]) {
        dec.progressions.push_back(ArithProgression{r, ep->period});
      }
    }
    rs.decomposition = std::move(dec);
  }
  return rs;
}

std::vector<int> decomposition_replay(const ReturnSet::Decomposition& dec, int n_max) {
  std::vector<int> out = dec.residual;
  for (const auto& ap : dec.progressions) {
    for (int n = ap.start; n <= n_max; n += ap.difference) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace arithdyn
