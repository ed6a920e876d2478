#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/rational.hpp"

namespace arithdyn {

// Exponent vector of a monomial; length always equals the variable count.
using Exponents = std::vector<std::uint32_t>;

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(VarList names);
VarListPtr make_vars(std::initializer_list<const char*> names);

inline std::int64_t exponent_sum(const Exponents& e) {
  std::int64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

// Graded lexicographic order: total degree first, then lexicographic with
// the earlier variable more significant. Fixed globally so every polynomial
// has one canonical term order and one canonical leading term.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored zero coefficients; every exponent vector has length
/// equal to the variable count; immutable in spirit (all operations return
/// new values), which makes sharing across threads safe.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit MultiPoly(VarListPtr vars);

  static MultiPoly zero(VarListPtr vars) { return MultiPoly(std::move(vars)); }
  static MultiPoly constant(VarListPtr vars, const Rational& c);
  static MultiPoly variable(VarListPtr vars, std::size_t index);
  static MultiPoly monomial(VarListPtr vars, Exponents exps, const Rational& c);

  const VarListPtr& vars() const { return vars_; }
  std::size_t var_count() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The zero polynomial has no degree; nullopt is the "minus infinity"
  // sentinel so degrees never silently enter integer arithmetic.
  std::optional<std::int64_t> total_degree() const;
  std::optional<std::int64_t> degree_in(std::size_t var_index) const;
  bool is_homogeneous() const;

  const Rational& coefficient(const Exponents& e) const;  // 0 if absent
  Rational constant_term() const;

  // Largest term in graded-lex order. Polynomial must be nonzero.
  const std::pair<const Exponents, Rational>& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rational& scalar) const;
  MultiPoly pow(std::uint64_t n) const;

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  /// Substitutes subs[i] for variable i. All subs must share one variable
  /// list, which becomes the variable list of the result.
  MultiPoly compose(const std::vector<MultiPoly>& subs) const;

  Rational eval(const std::vector<Rational>& point) const;
  Rational eval(const std::vector<Integer>& point) const;

  /// Homogenization to the given degree using an extended variable list:
  /// new_vars must be the current list plus one extra variable appended.
  MultiPoly homogenize_to(std::int64_t degree, VarListPtr new_vars) const;
  /// Sets the last variable to 1 and drops it; new_vars = old minus last.
  MultiPoly dehomogenize(VarListPtr new_vars) const;

  // Content and normalization. content() is the positive rational c such
  // that p/c has coprime integer coefficients; sign_normalized additionally
  // makes the graded-lex leading coefficient positive. canonical() = both.
  Rational content() const;
  MultiPoly canonical() const;

  // Componentwise minimum of all exponent vectors (the monomial content).
  Exponents min_exponents() const;
  MultiPoly divide_by_monomial(const Exponents& m) const;

  std::string to_string() const;

  // Internal-use constructor from a ready term map (zeros already absent).
  static MultiPoly from_terms(VarListPtr vars, TermMap terms);

 private:
  VarListPtr vars_;
  TermMap terms_;

  void insert_add(const Exponents& e, const Rational& c);
  void require_same_vars(const MultiPoly& rhs) const;
};

inline MultiPoly operator*(const Rational& scalar, const MultiPoly& p) {
  return p * scalar;
}

}  // namespace arithdyn
