#include "arithdyn/maps.hpp"

#include <algorithm>
#include <cctype>

#include "arithdyn/error.hpp"
#include "arithdyn/poly_gcd.hpp"

namespace arithdyn {

AffinePolyMap::AffinePolyMap(std::vector<MultiPoly> components) : comps_(std::move(components)) {
  if (comps_.empty()) fail(ErrorKind::Structural, "affine map needs at least one component");
  for (const auto& c : comps_) {
    if (c.vars() != comps_.front().vars() && *c.vars() != *comps_.front().vars()) {
      fail(ErrorKind::Structural, "affine map components over different variable lists");
    }
  }
  if (comps_.size() != comps_.front().var_count()) {
    fail(ErrorKind::Structural, "affine self-map needs as many components as variables");
  }
}

AffinePoint AffinePolyMap::evaluate(const AffinePoint& p) const {
  if (p.dimension() != dimension()) {
    fail(ErrorKind::Structural, "point dimension does not match map dimension");
  }
  std::vector<Rational> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.eval(p.coords()));
  return AffinePoint(std::move(out));
}

AffinePolyMap AffinePolyMap::compose(const AffinePolyMap& other) const {
  if (other.dimension() != dimension()) {
    fail(ErrorKind::Structural, "composition of maps of different dimensions");
  }
  std::vector<MultiPoly> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.compose(other.comps_));
  return AffinePolyMap(std::move(out));
}

std::int64_t AffinePolyMap::max_degree() const {
  std::int64_t d = 0;
  for (const auto& c : comps_) {
    if (auto cd = c.total_degree()) d = std::max(d, *cd);
  }
  return d;
}

bool AffinePolyMap::is_identity() const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i] != MultiPoly::variable(vars(), i)) return false;
  }
  return true;
}

std::optional<std::vector<std::vector<std::int64_t>>> AffinePolyMap::monomial_matrix() const {
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(comps_.size());
  for (const auto& c : comps_) {
    if (c.term_count() != 1) return std::nullopt;
    const auto& e = c.leading_term().first;
    m.emplace_back(e.begin(), e.end());
  }
  return m;
}

// ---------------------------------------------------------------------------

ProjRationalMap ProjRationalMap::saturate(std::vector<MultiPoly> components) {
  if (components.size() < 2) {
    fail(ErrorKind::Structural, "projective map needs at least two components");
  }
  for (const auto& c : components) {
    if (c.vars() != components.front().vars() && *c.vars() != *components.front().vars()) {
      fail(ErrorKind::Structural, "projective map components over different variable lists");
    }
  }
  bool all_zero = true;
  for (const auto& c : components) all_zero &= c.is_zero();
  if (all_zero) fail(ErrorKind::Structural, "projective map cannot be the zero tuple");

  MultiPoly g = poly_gcd_list(components);
  if (!g.is_constant()) {
    for (auto& c : components) {
      if (c.is_zero()) continue;
      c = *poly_divide_exact(c, g);
    }
  }

  // Joint canonical scaling: integer coefficients, joint content 1, first
  // nonzero component with positive leading coefficient.
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : components) {
    for (const auto& [e, coef] : c.terms()) {
      num_gcd = gcd(num_gcd, Integer(coef.get_num()));
      den_lcm = lcm(den_lcm, Integer(coef.get_den()));
    }
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  for (const auto& c : components) {
    if (!c.is_zero()) {
      if (c.leading_term().second * scale < 0) scale = -scale;
      break;
    }
  }
  std::optional<std::int64_t> common_degree;
  for (auto& c : components) {
    c = c * scale;
    if (!c.is_homogeneous()) {
      fail(ErrorKind::Structural, "projective map components must be homogeneous");
    }
    if (auto d = c.total_degree()) {
      if (common_degree && *common_degree != *d) {
        fail(ErrorKind::Structural, "projective map components must share one degree");
      }
      common_degree = d;
    }
  }

  if (!common_degree || *common_degree < 1) {
    // Degree 0 would mean a constant tuple, which is not a self-map.
    fail(ErrorKind::Structural, "projective map must have degree at least 1");
  }
  ProjRationalMap m;
  m.comps_ = std::move(components);
  m.degree_ = *common_degree;
  return m;
}

ProjRationalMap ProjRationalMap::compose(const ProjRationalMap& other) const {
  if (other.dimension() != dimension()) {
    fail(ErrorKind::Structural, "composition of maps of different dimensions");
  }
  std::vector<MultiPoly> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.compose(other.comps_));
  return saturate(std::move(out));
}

ProjRationalMap ProjRationalMap::iterate(std::int64_t n) const {
  if (n < 1) fail(ErrorKind::Parameter, "iterate needs n >= 1");
  ProjRationalMap acc = *this;
  for (std::int64_t i = 1; i < n; ++i) acc = compose(acc);
  return acc;
}

std::optional<ProjPoint> ProjRationalMap::evaluate(const ProjPoint& p) const {
  if (p.size() != comps_.size()) {
    fail(ErrorKind::Structural, "point dimension does not match map dimension");
  }
  std::vector<Rational> values;
  values.reserve(comps_.size());
  bool all_zero = true;
  for (const auto& c : comps_) {
    values.push_back(c.eval(p.coords()));
    all_zero &= values.back() == 0;
  }
  if (all_zero) return std::nullopt;  // indeterminate point
  return ProjPoint::from_rationals(values);
}

bool ProjRationalMap::is_identity() const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i] != MultiPoly::variable(vars(), i)) return false;
  }
  return true;
}

ProjRationalMap ProjRationalMap::identity(VarListPtr vars) {
  std::vector<MultiPoly> comps;
  const std::size_t n = vars->size();
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(MultiPoly::variable(vars, i));
  return saturate(std::move(comps));
}

// ---------------------------------------------------------------------------

VarListPtr homogenized_vars(const VarList& affine_vars) {
  VarList out;
  out.reserve(affine_vars.size() + 1);
  for (const auto& v : affine_vars) {
    std::string upper = v;
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out.push_back(std::move(upper));
  }
  auto taken = [&](const std::string& name) {
    return std::find(out.begin(), out.end(), name) != out.end();
  };
  for (const char* candidate : {"Z", "W", "U", "V", "T", "H"}) {
    if (!taken(candidate)) {
      out.emplace_back(candidate);
      return make_vars(std::move(out));
    }
  }
  std::string h = "H0";
  while (taken(h)) h += "0";
  out.push_back(std::move(h));
  return make_vars(std::move(out));
}

ProjRationalMap homogenize(const AffinePolyMap& f) {
  const std::int64_t d = f.max_degree();
  if (d < 1) {
    fail(ErrorKind::Structural, "constant affine maps have no projective extension");
  }
  VarListPtr pvars = homogenized_vars(*f.vars());
  std::vector<MultiPoly> comps;
  comps.reserve(f.dimension() + 1);
  for (const auto& c : f.components()) {
    comps.push_back(c.homogenize_to(d, pvars));
  }
  Exponents e(pvars->size(), 0);
  e.back() = static_cast<std::uint32_t>(d);
  comps.push_back(MultiPoly::monomial(pvars, std::move(e), Rational(1)));
  return ProjRationalMap::saturate(std::move(comps));
}

bool inverse_check(const AffinePolyMap& f, const AffinePolyMap& g) {
  if (f.dimension() != g.dimension()) {
    fail(ErrorKind::Structural, "inverse check needs equal dimensions");
  }
  return f.compose(g).is_identity() && g.compose(f).is_identity();
}

bool inverse_check(const ProjRationalMap& f, const ProjRationalMap& g) {
  if (f.dimension() != g.dimension()) {
    fail(ErrorKind::Structural, "inverse check needs equal dimensions");
  }
  return f.compose(g).is_identity() && g.compose(f).is_identity();
}

}  // namespace arithdyn
