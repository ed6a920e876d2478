#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/maps.hpp"
#include "arithdyn/topdegree.hpp"

namespace arithdyn {

/// Degrees of the saturated iterates: entries (n, deg(f^n)) for n = 1..n_max.
/// Submultiplicativity deg(f^(m+n)) <= deg(f^m) * deg(f^n) is checked on
/// construction.
struct DegreeSequence {
  std::string map_id;
  std::vector<std::pair<int, std::int64_t>> entries;
  bool truncated = false;  // a term-count cap stopped the sequence early

  std::int64_t degree_at(int n) const;
  void check_submultiplicative() const;
};

DegreeSequence degree_sequence(const ProjRationalMap& f, int n_max,
                               std::int64_t term_count_cap = 1000000,
                               const std::string& map_id = "map");

/// First-dynamical-degree estimate, reported as data: per-n roots
/// deg(f^n)^(1/n), successive ratios, and a stability verdict. Only
/// stability (deg(f^n) = deg(f)^n exactly for every computed n) yields an
/// exact value.
struct DynDegreeEstimate {
  std::vector<double> roots;
  std::vector<double> ratios;
  bool stable = false;
  std::optional<std::int64_t> delta1_exact;
};

DynDegreeEstimate estimate_delta1(const DegreeSequence& seq);

/// Constants attached to the two-term height recursion. Requires
/// zeta > 1/d1 + 1/d2; then
///   alpha = (zeta d1 d2 + sqrt(zeta^2 d1^2 d2^2 - 4 d1 d2)) / (2 d2),
///   beta  = the same numerator over (2 d1),
/// and the algebraic identities alpha/d1 + 1/(alpha d2) = zeta,
/// beta/d2 + 1/(beta d1) = zeta, alpha d2 = beta d1, alpha, beta > 1 are
/// verified at construction to relative tolerance 1e-9 in extended
/// precision.
struct LemmaConstants {
  long double zeta, d1, d2, C;
  long double alpha, beta;
};

LemmaConstants lemma_constants(long double zeta, long double d1, long double d2, long double C);

/// Residuals of the defining identities, for reporting.
struct LemmaResiduals {
  long double alpha_identity;  // |alpha/d1 + 1/(alpha d2) - zeta| (relative)
  long double beta_identity;
  long double cross;           // |alpha d2 - beta d1| (relative)
};
LemmaResiduals lemma_residuals(const LemmaConstants& c);

/// Dominance verdict between the first dynamical degree and the topological
/// degree. Dimension 2 compares delta1 with the topological degree;
/// dimension 3 needs an inverse and compares delta1(f) with delta1(f^-1),
/// which computes the second dynamical degree of a birational 3-fold map.
struct HyperbolicityReport {
  int dimension = 0;
  DegreeSequence seq;
  DynDegreeEstimate delta1;
  std::optional<TopDegreeEstimate> delta2;       // dimension 2
  std::optional<DegreeSequence> seq_inverse;     // dimension 3
  std::optional<DynDegreeEstimate> delta1_inverse;
  bool hyperbolic = false;
  bool exact = false;  // both sides exact; otherwise heuristic
  std::string summary;
};

struct HyperbolicityOptions {
  int n_max = 5;
  std::int64_t term_count_cap = 1000000;
  TopDegreeOptions topdeg;
};

HyperbolicityReport hyperbolicity_report(const AffinePolyMap& f,
                                         const std::optional<AffinePolyMap>& f_inverse,
                                         const HyperbolicityOptions& options,
                                         const std::string& map_id = "map");

}  // namespace arithdyn
