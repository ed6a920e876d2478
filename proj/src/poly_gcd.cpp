#include "arithdyn/poly_gcd.hpp"

#include <algorithm>
#include <cstdlib>

#include "arithdyn/error.hpp"

// Multivariate gcd over Q. Shape of the algorithm:
//
//   1. clear denominators and strip monomial content (variables are primes
//      of the ring, so the monomial part splits off exactly);
//   2. recurse on a main variable v: gcd = gcd(contents) * gcd(primitive
//      parts), the content taken with respect to v;
//   3. before any remainder sequence, evaluate the primitive parts at an
//      integer point that keeps both leading v-coefficients nonzero. The
//      univariate gcd degree at such a point bounds the v-degree of the
//      true gcd from above, so degree 0 certifies coprimality;
//   4. otherwise try exact division (one input dividing the other), then
//      fall back to a primitive pseudo-remainder sequence in v.
//
// Every shortcut is exact; no step is probabilistic.

namespace arithdyn {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z, used by the evaluation certificate.

using UniPoly = std::vector<Integer>;  // coeffs[i] is the x^i coefficient

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer uni_content(const UniPoly& p) {
  Integer g(0);
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

void uni_make_primitive(UniPoly& p) {
  Integer g = uni_content(p);
  if (g == 0 || g == 1) return;
  for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b: lc(b)^k * a reduced mod b.
UniPoly uni_pseudo_rem(UniPoly a, const UniPoly& b) {
  const int db = uni_degree(b);
  const Integer& lcb = b.back();
  while (uni_degree(a) >= db) {
    const int da = uni_degree(a);
    Integer lead = a.back();
    for (auto& c : a) c *= lcb;
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] -= lead * b[i];
    }
    uni_trim(a);
  }
  return a;
}

// Degree of gcd(a, b); primitive pseudo-remainder sequence.
int uni_gcd_degree(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  if (a.empty()) return uni_degree(b);
  if (b.empty()) return uni_degree(a);
  uni_make_primitive(a);
  uni_make_primitive(b);
  if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
  while (uni_degree(b) > 0) {
    UniPoly r = uni_pseudo_rem(a, b);
    if (r.empty()) return uni_degree(b);
    uni_make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Multivariate recursion over Z (MultiPoly with integer coefficients).

void collect_vars(const MultiPoly& p, std::vector<bool>& present) {
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) present[i] = true;
    }
  }
}

// Splits p by powers of variable v: out[k] = coefficient of v^k, a
// polynomial over the full variable list with v-degree zero.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t v) {
  const auto dv = p.degree_in(v);
  std::vector<MultiPoly::TermMap> maps(dv ? static_cast<std::size_t>(*dv) + 1 : 0);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(e);
    const std::uint32_t k = ne[v];
    ne[v] = 0;
    maps[k].emplace(std::move(ne), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(MultiPoly::from_terms(p.vars(), std::move(m)));
  return out;
}

MultiPoly rebuild_from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t v,
                                    const VarListPtr& vars) {
  MultiPoly::TermMap out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponents ne(e);
      ne[v] = static_cast<std::uint32_t>(k);
      out.emplace(std::move(ne), c);
    }
  }
  return MultiPoly::from_terms(vars, std::move(out));
}

Integer integer_content(const MultiPoly& p) {
  Integer g(0);
  for (const auto& [e, c] : p.terms()) g = gcd(g, Integer(c.get_num()));
  return g;
}

MultiPoly with_positive_leading(MultiPoly p) {
  if (!p.is_zero() && p.leading_term().second < 0) return -p;
  return p;
}

// True gcd over Z (integer content included), sign-normalized so the
// graded-lex leading coefficient is positive. Inputs must have integer
// coefficients.
MultiPoly gcd_integer_poly(MultiPoly p, MultiPoly q);

// gcd of the v-coefficients of p, integer content included.
MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  MultiPoly g = MultiPoly::zero(p.vars());
  for (const auto& c : coefficients_in(p, v)) {
    if (c.is_zero()) continue;
    g = gcd_integer_poly(g, c);
    if (!g.is_zero() && g.is_constant() && g.leading_term().second == 1) break;
  }
  return g;
}

// Substitutes integers for every variable except v; p must have integer
// coefficients.
UniPoly evaluate_except(const MultiPoly& p, std::size_t v, const std::vector<Integer>& point) {
  const auto dv = p.degree_in(v);
  UniPoly out(dv ? static_cast<std::size_t>(*dv) + 1 : 0, Integer(0));
  std::vector<std::vector<Integer>> powers(p.var_count());
  for (std::size_t i = 0; i < p.var_count(); ++i) {
    if (i == v) continue;
    std::uint32_t maxe = 0;
    for (const auto& [e, c] : p.terms()) maxe = std::max(maxe, e[i]);
    powers[i].reserve(maxe + 1);
    powers[i].push_back(Integer(1));
    for (std::uint32_t k = 1; k <= maxe; ++k) {
      powers[i].push_back(Integer(powers[i].back() * point[i]));
    }
  }
  for (const auto& [e, c] : p.terms()) {
    Integer t(c.get_num());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != v && e[i] > 0) t *= powers[i][e[i]];
    }
    out[e[v]] += t;
  }
  uni_trim(out);
  return out;
}

// Pseudo-remainder in variable v for integer multivariate polynomials.
MultiPoly pseudo_rem_in(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  std::vector<MultiPoly> ac = coefficients_in(a, v);
  const std::vector<MultiPoly> bc = coefficients_in(b, v);
  const MultiPoly& lcb = bc.back();
  const int db = static_cast<int>(bc.size()) - 1;
  auto degree_of = [](const std::vector<MultiPoly>& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[d].is_zero()) --d;
    return d;
  };
  int da = degree_of(ac);
  while (da >= db) {
    MultiPoly lead = ac[da];
    for (auto& c : ac) c = c * lcb;
    for (int i = 0; i <= db; ++i) {
      ac[da - db + i] = ac[da - db + i] - lead * bc[i];
    }
    da = degree_of(ac);
  }
  ac.resize(static_cast<std::size_t>(da + 1), MultiPoly::zero(a.vars()));
  return rebuild_from_coefficients(ac, v, a.vars());
}

MultiPoly primitive_part_in(const MultiPoly& p, std::size_t v, MultiPoly* content_out = nullptr) {
  MultiPoly c = content_in(p, v);
  if (content_out) *content_out = c;
  if (c.is_zero()) return p;
  if (c.is_constant()) {
    return p * Rational(1 / c.leading_term().second);
  }
  auto q = poly_divide_exact(p, c);
  // Division by the content is exact by construction.
  return *q;
}

MultiPoly gcd_integer_poly(MultiPoly p, MultiPoly q) {
  if (p.is_zero()) return with_positive_leading(std::move(q));
  if (q.is_zero()) return with_positive_leading(std::move(p));

  const VarListPtr vars = p.vars();
  const std::size_t n = p.var_count();

  const Exponents mp = p.min_exponents();
  const Exponents mq = q.min_exponents();
  Exponents mg(n, 0);
  bool has_monomial = false;
  for (std::size_t i = 0; i < n; ++i) {
    mg[i] = std::min(mp[i], mq[i]);
    if (mg[i] > 0) has_monomial = true;
  }
  if (has_monomial) {
    MultiPoly g = gcd_integer_poly(p.divide_by_monomial(mg), q.divide_by_monomial(mg));
    return g * MultiPoly::monomial(vars, mg, Rational(1));
  }

  if (p.is_constant() || q.is_constant()) {
    return MultiPoly::constant(vars, Rational(gcd(integer_content(p), integer_content(q))));
  }

  std::vector<bool> in_p(n, false), in_q(n, false);
  collect_vars(p, in_p);
  collect_vars(q, in_q);

  // Prefer a variable present in both sides, with the smallest combined
  // degree; that keeps the remainder sequence short.
  std::size_t v = n;
  std::int64_t best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_p[i] && in_q[i]) {
      const std::int64_t d = *p.degree_in(i) + *q.degree_in(i);
      if (best < 0 || d < best) {
        best = d;
        v = i;
      }
    }
  }
  if (v == n) {
    // No shared variable: the gcd cannot involve a variable private to one
    // side, so replace that side by its content.
    for (std::size_t i = 0; i < n; ++i) {
      if (in_p[i]) return gcd_integer_poly(content_in(p, i), std::move(q));
      if (in_q[i]) return gcd_integer_poly(std::move(p), content_in(q, i));
    }
    fail(ErrorKind::Structural, "nonconstant polynomial without variables");
  }

  MultiPoly cont_p(vars), cont_q(vars);
  MultiPoly pp = primitive_part_in(p, v, &cont_p);
  MultiPoly qq = primitive_part_in(q, v, &cont_q);
  MultiPoly c = gcd_integer_poly(cont_p, cont_q);

  const std::vector<MultiPoly> pc = coefficients_in(pp, v);
  const std::vector<MultiPoly> qc = coefficients_in(qq, v);
  const MultiPoly& lc_p = pc.back();
  const MultiPoly& lc_q = qc.back();
  long upper_bound = -1;
  std::vector<Integer> point(n, Integer(0));
  for (long attempt = 0; attempt < 24 && upper_bound < 0; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      const long base = attempt + 1 + static_cast<long>(i % 3);
      point[i] = (attempt + static_cast<long>(i)) % 2 == 0 ? base : -base;
    }
    if (lc_p.eval(point) == 0 || lc_q.eval(point) == 0) continue;
    upper_bound = uni_gcd_degree(evaluate_except(pp, v, point), evaluate_except(qq, v, point));
  }
  if (upper_bound == 0) {
    // deg_v(gcd(pp, qq)) = 0 and pp is v-primitive, so gcd(pp, qq) = 1.
    return c;
  }

  // Divisibility shortcut: in saturation the gcd usually equals one input.
  if (*pp.degree_in(v) >= *qq.degree_in(v)) {
    if (poly_divide_exact(pp, qq)) return c * with_positive_leading(std::move(qq));
  } else {
    if (poly_divide_exact(qq, pp)) return c * with_positive_leading(std::move(pp));
  }

  // Primitive pseudo-remainder sequence in v.
  MultiPoly a = std::move(pp);
  MultiPoly b = std::move(qq);
  if (*a.degree_in(v) < *b.degree_in(v)) std::swap(a, b);
  for (;;) {
    MultiPoly r = pseudo_rem_in(a, b, v);
    if (r.is_zero()) {
      return c * with_positive_leading(std::move(b));
    }
    if (*r.degree_in(v) == 0) {
      // Nonzero remainder constant in v: v-primitive inputs are coprime.
      return c;
    }
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
}

}  // namespace

std::optional<MultiPoly> poly_divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) return std::nullopt;
  const std::size_t n = p.var_count();

  if (d.term_count() == 1) {
    // Monomial divisor: per-term exponent subtraction.
    const auto& [de, dc] = d.leading_term();
    MultiPoly::TermMap out;
    for (const auto& [e, c] : p.terms()) {
      Exponents ne(e);
      for (std::size_t i = 0; i < n; ++i) {
        if (ne[i] < de[i]) return std::nullopt;
        ne[i] -= de[i];
      }
      out.emplace(std::move(ne), Rational(c / dc));
    }
    return MultiPoly::from_terms(p.vars(), std::move(out));
  }

  MultiPoly rem = p;
  MultiPoly quo = MultiPoly::zero(p.vars());
  const auto& [de, dc] = d.leading_term();
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    Exponents qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    MultiPoly t = MultiPoly::monomial(p.vars(), std::move(qe), Rational(rc / dc));
    quo = quo + t;
    rem = rem - t * d;
  }
  return quo;
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.vars() != q.vars() && *p.vars() != *q.vars()) {
    fail(ErrorKind::Structural, "gcd of polynomials over different variable lists");
  }
  if (p.is_zero() && q.is_zero()) return MultiPoly::zero(p.vars());
  // canonical() clears denominators and integer content in one step.
  return gcd_integer_poly(p.canonical(), q.canonical()).canonical();
}

MultiPoly poly_gcd_list(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) fail(ErrorKind::Structural, "gcd of an empty list");
  MultiPoly g = MultiPoly::zero(polys.front().vars());
  for (const auto& p : polys) {
    g = poly_gcd(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace arithdyn
