#include "arithdyn/orbit.hpp"

#include <map>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

bool over_digit_cap(const ProjPoint& p, std::int64_t cap) {
  return static_cast<std::int64_t>(decimal_digits(p.max_abs_coord())) > cap;
}

}  // namespace

OrbitRecord OrbitRecord::drop_prefix(std::size_t k) const {
  if (k >= size()) fail(ErrorKind::Parameter, "cannot drop the whole orbit");
  OrbitRecord out = *this;
  if (projective) {
    out.proj_points.erase(out.proj_points.begin(), out.proj_points.begin() + k);
  } else {
    out.affine_points.erase(out.affine_points.begin(), out.affine_points.begin() + k);
  }
  out.heights.erase(out.heights.begin(), out.heights.begin() + k);
  out.start_index += static_cast<int>(k);
  return out;
}

OrbitRecord forward_orbit(const AffinePolyMap& f, const AffinePoint& start, int n_max,
                          const OrbitOptions& options, const std::string& map_id) {
  if (n_max < 0) fail(ErrorKind::Parameter, "orbit length must be nonnegative");
  OrbitRecord rec;
  rec.map_id = map_id;
  rec.projective = false;
  rec.affine_points.push_back(start);
  rec.heights.push_back(weil_height(start));
  AffinePoint p = start;
  for (int n = 1; n <= n_max; ++n) {
    p = f.evaluate(p);
    const ProjPoint closure = projective_closure(p);
    if (over_digit_cap(closure, options.coordinate_digit_cap)) {
      rec.truncated = true;
      break;
    }
    rec.affine_points.push_back(p);
    rec.heights.push_back(weil_height(closure));
  }
  return rec;
}

OrbitRecord forward_orbit(const ProjRationalMap& f, const ProjPoint& start, int n_max,
                          const OrbitOptions& options, const std::string& map_id) {
  if (n_max < 0) fail(ErrorKind::Parameter, "orbit length must be nonnegative");
  OrbitRecord rec;
  rec.map_id = map_id;
  rec.projective = true;
  rec.proj_points.push_back(start);
  rec.heights.push_back(weil_height(start));
  ProjPoint p = start;
  for (int n = 1; n <= n_max; ++n) {
    auto next = f.evaluate(p);
    if (!next) {
      rec.indeterminacy_index = n - 1;
      break;
    }
    p = *next;
    if (over_digit_cap(p, options.coordinate_digit_cap)) {
      rec.truncated = true;
      break;
    }
    rec.proj_points.push_back(p);
    rec.heights.push_back(weil_height(p));
  }
  return rec;
}

OrbitRecord full_orbit(const AffinePolyMap& f, const AffinePolyMap& f_inverse,
                       const AffinePoint& start, int n_max, const OrbitOptions& options,
                       const std::string& map_id) {
  if (!inverse_check(f, f_inverse)) {
    fail(ErrorKind::Parameter, "full orbit needs a verified inverse");
  }
  OrbitRecord fwd = forward_orbit(f, start, n_max, options, map_id);
  OrbitRecord bwd = forward_orbit(f_inverse, start, n_max, options, map_id);

  OrbitRecord rec;
  rec.map_id = map_id;
  rec.projective = false;
  rec.direction = OrbitRecord::Direction::Full;
  rec.truncated = fwd.truncated || bwd.truncated;
  rec.start_index = -static_cast<int>(bwd.affine_points.size() - 1);
  for (std::size_t i = bwd.affine_points.size(); i-- > 1;) {
    rec.affine_points.push_back(bwd.affine_points[i]);
    rec.heights.push_back(bwd.heights[i]);
  }
  for (std::size_t i = 0; i < fwd.affine_points.size(); ++i) {
    rec.affine_points.push_back(fwd.affine_points[i]);
    rec.heights.push_back(fwd.heights[i]);
  }
  return rec;
}

std::optional<PeriodicityResult> detect_periodicity(const OrbitRecord& rec) {
  std::map<std::string, std::size_t> seen;
  const std::size_t n = rec.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string key =
        rec.projective ? rec.proj_points[i].to_string() : rec.affine_points[i].to_string();
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) {
      return PeriodicityResult{static_cast<int>(it->second), static_cast<int>(i - it->second)};
    }
  }
  return std::nullopt;
}

}  // namespace arithdyn
