#include "arithdyn/zoo.hpp"

#include <algorithm>
#include <sstream>

#include "arithdyn/error.hpp"
#include "arithdyn/poly_parser.hpp"

namespace arithdyn {

namespace {

Rational scalar_param(const ZooParams& p, const std::string& key, const char* family,
                      std::optional<Rational> fallback = std::nullopt) {
  auto it = p.scalars.find(key);
  if (it != p.scalars.end()) return it->second;
  if (fallback) return *fallback;
  fail(ErrorKind::Parameter, std::string(family) + " needs parameter '" + key + "'");
}

long int_param(const ZooParams& p, const std::string& key, const char* family, long fallback_or,
               bool has_fallback) {
  auto it = p.scalars.find(key);
  if (it == p.scalars.end()) {
    if (has_fallback) return fallback_or;
    fail(ErrorKind::Parameter, std::string(family) + " needs integer parameter '" + key + "'");
  }
  if (it->second.get_den() != 1 || !it->second.get_num().fits_slong_p()) {
    fail(ErrorKind::Parameter,
         std::string(family) + " parameter '" + key + "' must be a small integer");
  }
  return it->second.get_num().get_si();
}

ZooMap build_henon(const ZooParams& p) {
  const Rational a = scalar_param(p, "a", "henon");
  const Rational b = scalar_param(p, "b", "henon", Rational(0));
  if (a == 0) fail(ErrorKind::Parameter, "henon needs a != 0");
  auto vars = make_vars({"x", "y"});
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  const MultiPoly bconst = MultiPoly::constant(vars, b);

  ZooMap m;
  std::ostringstream label;
  label << "henon(a=" << a.get_str() << ",b=" << b.get_str() << ")";
  m.label = label.str();
  m.affine = AffinePolyMap({y, y * y + a * x + bconst});
  // Solving (x', y') = (y, y^2 + a x + b) for (x, y) gives polynomial
  // components over Q for every nonzero a.
  m.affine_inverse = AffinePolyMap({(y - x * x - bconst) * Rational(1 / a), x});
  return m;
}

ZooMap build_gs02(const ZooParams& p) {
  const long d = int_param(p, "d", "gs02", 0, false);
  if (d < 1) fail(ErrorKind::Parameter, "gs02 needs d >= 1");
  auto vars = make_vars({"x", "y", "z"});
  const MultiPoly x = MultiPoly::variable(vars, 0);
  const MultiPoly y = MultiPoly::variable(vars, 1);
  const MultiPoly z = MultiPoly::variable(vars, 2);

  ZooMap m;
  m.label = "gs02(d=" + std::to_string(d) + ")";
  m.affine = AffinePolyMap({y * x.pow(d) + z, y.pow(d + 1) + x, y});
  const MultiPoly u = y - z.pow(d + 1);
  m.affine_inverse = AffinePolyMap({u, z, x - z * u.pow(d)});
  return m;
}

ZooMap build_shift(const ZooParams& p) {
  const Rational c = scalar_param(p, "c", "shift", Rational(1));
  auto vars = make_vars({"x"});
  const MultiPoly x = MultiPoly::variable(vars, 0);
  ZooMap m;
  m.label = "shift(c=" + c.get_str() + ")";
  m.affine = AffinePolyMap({x + MultiPoly::constant(vars, c)});
  m.affine_inverse = AffinePolyMap({x - MultiPoly::constant(vars, c)});
  return m;
}

ZooMap build_swap(const ZooParams&) {
  auto vars = make_vars({"x", "y"});
  ZooMap m;
  m.label = "swap";
  AffinePolyMap f({MultiPoly::variable(vars, 1), MultiPoly::variable(vars, 0)});
  m.affine = f;
  m.affine_inverse = f;
  return m;
}

// Integer inverse of an integer matrix, when it exists (adjugate divisible
// by the determinant; in particular whenever |det| = 1).
std::optional<std::vector<std::vector<std::int64_t>>> integer_inverse(
    const std::vector<std::vector<std::int64_t>>& m, Integer& det_out) {
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Cofactor expansion; matrices here are small.
  std::function<Integer(const std::vector<std::vector<Integer>>&)> det =
      [&](const std::vector<std::vector<Integer>>& mat) -> Integer {
    const std::size_t k = mat.size();
    if (k == 1) return mat[0][0];
    Integer acc(0);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<Integer>> minor(k - 1, std::vector<Integer>(k - 1));
      for (std::size_t r = 1; r < k; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < k; ++c) {
          if (c == j) continue;
          minor[r - 1][cc++] = mat[r][c];
        }
      }
      Integer term = mat[0][j] * det(minor);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };
  det_out = det(a);
  if (det_out == 0) return std::nullopt;

  std::vector<std::vector<std::int64_t>> inv(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Integer>> minor(n - 1, std::vector<Integer>(n - 1));
      std::size_t rr = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;  // transposed cofactor
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      Integer cof = n == 1 ? Integer(1) : det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      Integer q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cof.get_mpz_t(), det_out.get_mpz_t());
      if (r != 0) return std::nullopt;
      if (!q.fits_slong_p()) return std::nullopt;
      inv[i][j] = q.get_si();
    }
  }
  return inv;
}

VarList monomial_affine_names(std::size_t n) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  VarList v;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(i < 4 ? kNames[i] : "x" + std::to_string(i + 1));
  }
  return v;
}

// Projective model of a monomial map on the chart with homogenizer last:
// Laurent components are cleared by the smallest monomial multiplier.
ProjRationalMap monomial_projective(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  VarListPtr pvars = homogenized_vars(monomial_affine_names(n));
  const std::size_t cols = n + 1;
  // Laurent exponents of the n components plus the trailing 1.
  std::vector<std::vector<std::int64_t>> laurent(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      laurent[i][j] = m[i][j];
      row_sum += m[i][j];
    }
    laurent[i][n] = -row_sum;
  }
  std::vector<std::int64_t> shift(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    std::int64_t mn = 0;
    for (std::size_t i = 0; i < cols; ++i) mn = std::min(mn, laurent[i][j]);
    shift[j] = -mn;
  }
  std::vector<MultiPoly> comps;
  comps.reserve(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Exponents e(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      e[j] = static_cast<std::uint32_t>(laurent[i][j] + shift[j]);
    }
    comps.push_back(MultiPoly::monomial(pvars, std::move(e), Rational(1)));
  }
  return ProjRationalMap::saturate(std::move(comps));
}

ZooMap build_monomial(const ZooParams& p) {
  if (!p.matrix) {
    fail(ErrorKind::Parameter, "monomial needs an exponent matrix parameter 'm'");
  }
  const auto& m = *p.matrix;
  const std::size_t n = m.size();
  if (n == 0) fail(ErrorKind::Parameter, "monomial matrix must be nonempty");
  for (const auto& row : m) {
    if (row.size() != n) fail(ErrorKind::Parameter, "monomial matrix must be square");
  }

  Integer det;
  auto inv = integer_inverse(m, det);
  if (det == 0) fail(ErrorKind::Parameter, "monomial matrix must have nonzero determinant");

  ZooMap out;
  std::ostringstream label;
  label << "monomial([";
  for (std::size_t i = 0; i < n; ++i) {
    label << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n; ++j) label << (j ? "," : "") << m[i][j];
    label << "]";
  }
  label << "])";
  out.label = label.str();

  auto nonneg = [](const std::vector<std::vector<std::int64_t>>& mat) {
    for (const auto& row : mat) {
      for (auto v : row) {
        if (v < 0) return false;
      }
    }
    return true;
  };

  auto affine_from = [&](const std::vector<std::vector<std::int64_t>>& mat) {
    VarListPtr vars = make_vars(monomial_affine_names(n));
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<std::uint32_t>(mat[i][j]);
      comps.push_back(MultiPoly::monomial(vars, std::move(e), Rational(1)));
    }
    return AffinePolyMap(std::move(comps));
  };

  if (nonneg(m)) out.affine = affine_from(m);
  out.projective = monomial_projective(m);
  if (inv) {
    if (nonneg(*inv) && out.affine) out.affine_inverse = affine_from(*inv);
    out.projective_inverse = monomial_projective(*inv);
  }
  return out;
}

ZooMap build_cremona(const ZooParams&) {
  // The standard quadratic involution of the projective plane.
  ZooMap m = build_monomial([] {
    ZooParams p;
    p.matrix = {{-1, 0}, {0, -1}};
    return p;
  }());
  m.label = "cremona";
  return m;
}

void verify_inverses(const ZooMap& m) {
  if (m.affine && m.affine_inverse) {
    if (!inverse_check(*m.affine, *m.affine_inverse)) {
      fail(ErrorKind::Structural, m.label + ": stored inverse fails the inverse check");
    }
  } else if (m.projective && m.projective_inverse) {
    if (!inverse_check(*m.projective, *m.projective_inverse)) {
      fail(ErrorKind::Structural, m.label + ": stored inverse fails the inverse check");
    }
  }
}

}  // namespace

ProjRationalMap ZooMap::proj() const {
  if (projective) return *projective;
  return homogenize(*affine);
}

std::optional<ProjRationalMap> ZooMap::proj_inverse() const {
  if (projective_inverse) return projective_inverse;
  if (affine_inverse) return homogenize(*affine_inverse);
  return std::nullopt;
}

const std::vector<MapZooEntry>& zoo_entries() {
  static const std::vector<MapZooEntry> entries = {
      {"henon", "a (nonzero), b (default 0)",
       "plane automorphism (x, y) -> (y, y^2 + a*x + b) with polynomial inverse", build_henon},
      {"gs02", "d (integer >= 1)",
       "3-space automorphism (x, y, z) -> (y*x^d + z, y^(d+1) + x, y); slow forward and fast "
       "inverse degree growth",
       build_gs02},
      {"monomial", "m (square integer matrix, nonzero determinant)",
       "monomial map x_i -> prod x_j^(m[i][j]); negative exponents give a projective model",
       build_monomial},
      {"cremona", "(none)", "quadratic involution [YZ : XZ : XY] of the projective plane",
       build_cremona},
      {"shift", "c (default 1)", "translation x -> x + c of the affine line", build_shift},
      {"swap", "(none)", "coordinate swap (x, y) -> (y, x)", build_swap},
  };
  return entries;
}

ZooMap zoo_get(const std::string& name, const ZooParams& params) {
  for (const auto& e : zoo_entries()) {
    if (e.name == name) {
      ZooMap m = e.build(params);
      verify_inverses(m);
      return m;
    }
  }
  fail(ErrorKind::Parameter, "unknown zoo map '" + name + "'");
}

}  // namespace arithdyn
