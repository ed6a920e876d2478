#include "arithdyn/degrees.hpp"

#include <cmath>
#include <sstream>

#include "arithdyn/error.hpp"

namespace arithdyn {

std::int64_t DegreeSequence::degree_at(int n) const {
  for (const auto& [k, d] : entries) {
    if (k == n) return d;
  }
  fail(ErrorKind::Parameter, "degree sequence has no entry for n=" + std::to_string(n));
}

void DegreeSequence::check_submultiplicative() const {
  for (const auto& [m, dm] : entries) {
    for (const auto& [n, dn] : entries) {
      for (const auto& [s, ds] : entries) {
        if (s == m + n && ds > dm * dn) {
          std::ostringstream msg;
          msg << "degree sequence not submultiplicative at " << m << "+" << n;
          fail(ErrorKind::Structural, msg.str());
        }
      }
    }
  }
}

DegreeSequence degree_sequence(const ProjRationalMap& f, int n_max, std::int64_t term_count_cap,
                               const std::string& map_id) {
  if (n_max < 1) fail(ErrorKind::Parameter, "degree sequence needs n_max >= 1");
  DegreeSequence seq;
  seq.map_id = map_id;
  ProjRationalMap g = f;
  seq.entries.emplace_back(1, g.degree());
  for (int n = 2; n <= n_max; ++n) {
    std::int64_t terms = 0;
    for (const auto& c : g.components()) terms += static_cast<std::int64_t>(c.term_count());
    // Conservative cap check before composing: the product can reach the
    // product of the term counts.
    std::int64_t f_terms = 0;
    for (const auto& c : f.components()) f_terms += static_cast<std::int64_t>(c.term_count());
    if (terms > term_count_cap / std::max<std::int64_t>(1, f_terms)) {
      seq.truncated = true;
      break;
    }
    g = f.compose(g);
    std::int64_t got = 0;
    for (const auto& c : g.components()) got += static_cast<std::int64_t>(c.term_count());
    if (got > term_count_cap) {
      seq.truncated = true;
      break;
    }
    seq.entries.emplace_back(n, g.degree());
  }
  seq.check_submultiplicative();
  return seq;
}

DynDegreeEstimate estimate_delta1(const DegreeSequence& seq) {
  if (seq.entries.size() < 2) {
    fail(ErrorKind::Parameter, "dynamical degree estimation needs at least 2 entries");
  }
  DynDegreeEstimate est;
  const std::int64_t d1 = seq.entries.front().second;
  est.stable = true;
  std::int64_t expected = 1;
  for (const auto& [n, d] : seq.entries) {
    est.roots.push_back(std::pow(static_cast<double>(d), 1.0 / n));
    if (expected > 0 && d1 != 0) {
      // expected = d1^n, tracked incrementally; overflow simply disables
      // the exactness claim for sequences far beyond practical caps.
      if (expected > (std::int64_t(1) << 62) / std::max<std::int64_t>(d1, 1)) {
        expected = -1;
      } else {
        expected *= d1;
      }
    }
    if (expected < 0 || d != expected) est.stable = false;
  }
  for (std::size_t i = 0; i + 1 < seq.entries.size(); ++i) {
    est.ratios.push_back(static_cast<double>(seq.entries[i + 1].second) /
                         static_cast<double>(seq.entries[i].second));
  }
  if (est.stable) est.delta1_exact = d1;
  return est;
}

LemmaConstants lemma_constants(long double zeta, long double d1, long double d2, long double C) {
  if (!(d1 > 0) || !(d2 > 0)) {
    fail(ErrorKind::Parameter, "lemma constants need d1 > 0 and d2 > 0");
  }
  if (!(C > 0)) fail(ErrorKind::Parameter, "lemma constants need C > 0");
  const long double threshold = 1.0L / d1 + 1.0L / d2;
  if (!(zeta > threshold)) {
    std::ostringstream msg;
    msg << "hypothesis violated: zeta = " << static_cast<double>(zeta)
        << " must exceed 1/d1 + 1/d2 = " << static_cast<double>(threshold);
    fail(ErrorKind::Parameter, msg.str());
  }
  LemmaConstants c{zeta, d1, d2, C, 0.0L, 0.0L};
  const long double disc = zeta * zeta * d1 * d1 * d2 * d2 - 4.0L * d1 * d2;
  // zeta > 1/d1 + 1/d2 makes the discriminant positive.
  const long double root = sqrtl(disc);
  c.alpha = (zeta * d1 * d2 + root) / (2.0L * d2);
  c.beta = (zeta * d1 * d2 + root) / (2.0L * d1);

  const LemmaResiduals r = lemma_residuals(c);
  const long double tol = 1e-9L;
  if (!(c.alpha > 1.0L) || !(c.beta > 1.0L) || r.alpha_identity > tol || r.beta_identity > tol ||
      r.cross > tol || !(c.alpha >= zeta * d1 / 2.0L * (1.0L - tol))) {
    fail(ErrorKind::Structural, "lemma constant identities failed validation");
  }
  return c;
}

LemmaResiduals lemma_residuals(const LemmaConstants& c) {
  auto rel = [](long double err, long double scale) {
    return fabsl(err) / std::max<long double>(1.0L, fabsl(scale));
  };
  LemmaResiduals r;
  r.alpha_identity = rel(c.alpha / c.d1 + 1.0L / (c.alpha * c.d2) - c.zeta, c.zeta);
  r.beta_identity = rel(c.beta / c.d2 + 1.0L / (c.beta * c.d1) - c.zeta, c.zeta);
  r.cross = rel(c.alpha * c.d2 - c.beta * c.d1, c.alpha * c.d2);
  return r;
}

HyperbolicityReport hyperbolicity_report(const AffinePolyMap& f,
                                         const std::optional<AffinePolyMap>& f_inverse,
                                         const HyperbolicityOptions& options,
                                         const std::string& map_id) {
  const int dim = static_cast<int>(f.dimension());
  if (dim != 2 && dim != 3) {
    fail(ErrorKind::Unsupported, "hyperbolicity verdicts cover dimensions 2 and 3 only");
  }
  if (dim == 3) {
    if (!f_inverse) {
      fail(ErrorKind::Parameter,
           "dimension 3 needs an inverse: the second dynamical degree is computed as "
           "delta1 of the inverse");
    }
    if (!inverse_check(f, *f_inverse)) {
      fail(ErrorKind::Parameter, "provided inverse fails the inverse check");
    }
  }

  HyperbolicityReport rep;
  rep.dimension = dim;
  rep.seq = degree_sequence(homogenize(f), options.n_max, options.term_count_cap, map_id);
  rep.delta1 = estimate_delta1(rep.seq);

  std::ostringstream summary;
  if (dim == 2) {
    rep.delta2 = topological_degree(f, f_inverse, options.topdeg);
    const double d1 = rep.delta1.delta1_exact ? static_cast<double>(*rep.delta1.delta1_exact)
                                              : rep.delta1.roots.back();
    const double d2 = static_cast<double>(rep.delta2->value);
    rep.hyperbolic = d1 > d2;
    rep.exact = rep.delta1.stable && rep.delta2->exact;
    summary << "delta1 " << (rep.hyperbolic ? ">" : "<=") << " delta2 (" << d1 << " vs " << d2
            << ")";
  } else {
    rep.seq_inverse = degree_sequence(homogenize(*f_inverse), options.n_max,
                                      options.term_count_cap, map_id + "^-1");
    rep.delta1_inverse = estimate_delta1(*rep.seq_inverse);
    const double d1 = rep.delta1.delta1_exact ? static_cast<double>(*rep.delta1.delta1_exact)
                                              : rep.delta1.roots.back();
    const double d2 = rep.delta1_inverse->delta1_exact
                          ? static_cast<double>(*rep.delta1_inverse->delta1_exact)
                          : rep.delta1_inverse->roots.back();
    rep.hyperbolic = d1 != d2;
    rep.exact = rep.delta1.stable && rep.delta1_inverse->stable;
    summary << "delta1(f) " << (rep.hyperbolic ? "!=" : "=") << " delta2(f) = delta1(f^-1) (" << d1
            << " vs " << d2 << ")";
  }
  summary << (rep.exact ? ", exact" : ", heuristic");
  rep.summary = summary.str();
  return rep;
}

}  // namespace arithdyn
