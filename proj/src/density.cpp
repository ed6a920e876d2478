#include "arithdyn/density.hpp"

#include <algorithm>
#include <functional>

#include "arithdyn/error.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/modp.hpp"

namespace arithdyn {

namespace {

// Monomial exponent lists in graded-lex ascending order.
std::vector<Exponents> monomial_basis(std::size_t nvars, int degree, bool exact_degree) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (pos + 1 == nvars) {
      if (exact_degree) {
        e[pos] = static_cast<std::uint32_t>(remaining);
        out.push_back(e);
      } else {
        for (int k = 0; k <= remaining; ++k) {
          e[pos] = static_cast<std::uint32_t>(k);
          out.push_back(e);
        }
      }
      e[pos] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[pos] = static_cast<std::uint32_t>(k);
      rec(pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::optional<std::uint64_t> coord_residue(const Rational& q, std::uint64_t p) {
  return residue_mod_p(q, p);
}
std::optional<std::uint64_t> coord_residue(const Integer& z, std::uint64_t p) {
  return residue_mod_p(z, p);
}

template <typename Point>
CurveWitness search_impl(const std::vector<Point>& points, int degree_bound,
                         const VarListPtr& vars, bool exact_degree) {
  if (degree_bound < 1) fail(ErrorKind::Parameter, "degree bound must be at least 1");
  for (const auto& pt : points) {
    if (pt.coords().size() != vars->size()) {
      fail(ErrorKind::Structural, "point dimension does not match the variable list");
    }
  }

  const std::vector<Exponents> monos = monomial_basis(vars->size(), degree_bound, exact_degree);

  CurveWitness w;
  w.degree_bound = degree_bound;
  w.monomial_count = monos.size();
  w.points_used = points.size();

  if (points.size() < monos.size()) {
    w.status = CurveWitness::Status::Inconclusive;
    w.certificate = "underdetermined: " + std::to_string(points.size()) + " points for " +
                    std::to_string(monos.size()) + " monomials";
    return w;
  }

  // Modular full-rank certificate first: orbit coordinates can be huge, so
  // reduce them before forming monomials. A nonzero maximal minor mod p is
  // a nonzero integer minor, which proves full column rank over Q.
  static const std::uint64_t kPrimes[] = {1000000007ull, 1000000009ull, 998244353ull,
                                          2147483647ull, 4294967311ull};
  for (std::uint64_t p : kPrimes) {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(points.size());
    bool good = true;
    for (const auto& pt : points) {
      std::vector<std::uint64_t> coords;
      coords.reserve(pt.coords().size());
      for (const auto& c : pt.coords()) {
        auto r = coord_residue(c, p);
        if (!r) {
          good = false;
          break;
        }
        coords.push_back(*r);
      }
      if (!good) break;
      std::vector<std::uint64_t> row;
      row.reserve(monos.size());
      for (const auto& e : monos) {
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (e[i] > 0) v = mulmod(v, powmod(coords[i], e[i], p), p);
        }
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
    if (!good) continue;
    if (rank_mod_p_raw(std::move(rows), p) == monos.size()) {
      w.status = CurveWitness::Status::NoneCertified;
      w.certificate = "full column rank modulo " + std::to_string(p);
      return w;
    }
    break;  // rank-deficient mod p: settle it exactly
  }

  ExactMatrix m(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Rational v(1);
      for (std::size_t i = 0; i < points[r].coords().size(); ++i) {
        for (std::uint32_t k = 0; k < monos[c][i]; ++k) v *= points[r].coords()[i];
      }
      m.at(r, c) = std::move(v);
    }
  }

  const auto basis = nullspace(m);
  if (basis.empty()) {
    w.status = CurveWitness::Status::NoneCertified;
    w.certificate = "full column rank by exact elimination";
    return w;
  }

  MultiPoly::TermMap terms;
  for (std::size_t c = 0; c < monos.size(); ++c) {
    if (basis.front()[c] != 0) terms.emplace(monos[c], basis.front()[c]);
  }
  MultiPoly curve = MultiPoly::from_terms(vars, std::move(terms)).canonical();
  for (const auto& pt : points) {
    if (curve.eval(pt.coords()) != 0) {
      fail(ErrorKind::Structural, "nullspace vector fails to vanish on the sample");
    }
  }
  w.status = CurveWitness::Status::CurveFound;
  w.curve = std::move(curve);
  return w;
}

}  // namespace

CurveWitness invariant_curve_search(const std::vector<AffinePoint>& points, int degree_bound,
                                    const VarListPtr& vars) {
  return search_impl(points, degree_bound, vars, /*exact_degree=*/false);
}

CurveWitness invariant_curve_search(const std::vector<ProjPoint>& points, int degree_bound,
                                    const VarListPtr& vars) {
  return search_impl(points, degree_bound, vars, /*exact_degree=*/true);
}

}  // namespace arithdyn
