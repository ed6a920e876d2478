#include "arithdyn/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "arithdyn/error.hpp"

namespace arithdyn {

VarListPtr make_vars(VarList names) {
  return std::make_shared<const VarList>(std::move(names));
}

VarListPtr make_vars(std::initializer_list<const char*> names) {
  VarList v;
  v.reserve(names.size());
  for (const char* n : names) v.emplace_back(n);
  return make_vars(std::move(v));
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const std::int64_t da = exponent_sum(a);
  const std::int64_t db = exponent_sum(b);
  if (da != db) return da < db;
  // Same degree: lex with earlier variables more significant.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly::MultiPoly(VarListPtr vars) : vars_(std::move(vars)) {
  if (!vars_) fail(ErrorKind::Structural, "polynomial needs a variable list");
}

MultiPoly MultiPoly::constant(VarListPtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.var_count(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarListPtr vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.var_count()) {
    fail(ErrorKind::Structural, "variable index out of range");
  }
  Exponents e(p.var_count(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarListPtr vars, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (exps.size() != p.var_count()) {
    fail(ErrorKind::Structural, "exponent vector length mismatch");
  }
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

MultiPoly MultiPoly::from_terms(VarListPtr vars, TermMap terms) {
  MultiPoly p(std::move(vars));
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
}

std::optional<std::int64_t> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Leading term under graded-lex has maximal total degree.
  return exponent_sum(terms_.rbegin()->first);
}

std::optional<std::int64_t> MultiPoly::degree_in(std::size_t var_index) const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<std::int64_t>(d, e[var_index]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::int64_t d = exponent_sum(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (exponent_sum(e) != d) return false;
  }
  return true;
}

const Rational& MultiPoly::coefficient(const Exponents& e) const {
  static const Rational kZero(0);
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

Rational MultiPoly::constant_term() const {
  return coefficient(Exponents(var_count(), 0));
}

const std::pair<const Exponents, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::Structural, "zero polynomial has no leading term");
  return *terms_.rbegin();
}

void MultiPoly::require_same_vars(const MultiPoly& rhs) const {
  if (vars_ == rhs.vars_) return;
  if (*vars_ != *rhs.vars_) {
    fail(ErrorKind::Structural, "polynomials have different variable lists");
  }
}

void MultiPoly::insert_add(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  require_same_vars(rhs);
  MultiPoly r = *this;
  for (const auto& [e, c] : rhs.terms_) r.insert_add(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  require_same_vars(rhs);
  MultiPoly r = *this;
  for (const auto& [e, c] : rhs.terms_) {
    Rational neg = -c;
    r.insert_add(e, neg);
  }
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  require_same_vars(rhs);
  MultiPoly r(vars_);
  const std::size_t n = var_count();
  Exponents e(n);
  Rational prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      r.insert_add(e, prod);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  if (scalar == 0) return MultiPoly(vars_);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scalar);
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t n) const {
  // 0th power is 1 by the empty-product convention, also for the zero poly.
  MultiPoly result = MultiPoly::constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (vars_ != rhs.vars_ && *vars_ != *rhs.vars_) return false;
  return terms_ == rhs.terms_;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& subs) const {
  if (subs.size() != var_count()) {
    fail(ErrorKind::Structural, "composition needs one substitution per variable");
  }
  for (const auto& s : subs) subs.front().require_same_vars(s);
  const VarListPtr out_vars = subs.empty() ? vars_ : subs.front().vars();

  // Cache powers of each substituted polynomial up to the largest exponent
  // that actually occurs.
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::uint32_t maxe = 0;
    for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[i]);
    powers[i].reserve(maxe + 1);
    powers[i].push_back(MultiPoly::constant(out_vars, Rational(1)));
    for (std::uint32_t k = 1; k <= maxe; ++k) {
      powers[i].push_back(powers[i].back() * subs[i]);
    }
  }

  MultiPoly result(out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    result = result + term;
  }
  return result;
}

namespace {

template <typename T>
Rational eval_terms(const MultiPoly& p, const std::vector<T>& point) {
  if (point.size() != p.var_count()) {
    fail(ErrorKind::Structural, "evaluation point has wrong dimension");
  }
  // Power cache per variable.
  std::vector<std::vector<T>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    std::uint32_t maxe = 0;
    for (const auto& [e, c] : p.terms()) maxe = std::max(maxe, e[i]);
    powers[i].reserve(maxe + 1);
    powers[i].push_back(T(1));
    for (std::uint32_t k = 1; k <= maxe; ++k) {
      powers[i].push_back(T(powers[i].back() * point[i]));
    }
  }
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (e[i] > 0) t *= powers[i][e[i]];
    }
    acc += t;
  }
  return acc;
}

}  // namespace

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  return eval_terms(*this, point);
}

Rational MultiPoly::eval(const std::vector<Integer>& point) const {
  return eval_terms(*this, point);
}

MultiPoly MultiPoly::homogenize_to(std::int64_t degree, VarListPtr new_vars) const {
  if (new_vars->size() != var_count() + 1) {
    fail(ErrorKind::Structural, "homogenization needs exactly one extra variable");
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    const std::int64_t d = exponent_sum(e);
    if (d > degree) {
      fail(ErrorKind::Structural, "term degree exceeds homogenization degree");
    }
    Exponents ne(e);
    ne.push_back(static_cast<std::uint32_t>(degree - d));
    out.emplace(std::move(ne), c);
  }
  return from_terms(std::move(new_vars), std::move(out));
}

MultiPoly MultiPoly::dehomogenize(VarListPtr new_vars) const {
  if (new_vars->size() + 1 != var_count()) {
    fail(ErrorKind::Structural, "dehomogenization drops exactly one variable");
  }
  MultiPoly r(std::move(new_vars));
  for (const auto& [e, c] : terms_) {
    Exponents ne(e.begin(), e.end() - 1);
    r.insert_add(ne, c);
  }
  return r;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  return make_rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::canonical() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.rbegin()->second < 0) c = -c;
  MultiPoly r(vars_);
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, Rational(coef / c));
  return r;
}

Exponents MultiPoly::min_exponents() const {
  Exponents m(var_count(), 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

MultiPoly MultiPoly::divide_by_monomial(const Exponents& m) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne(e);
    for (std::size_t i = 0; i < ne.size(); ++i) {
      if (ne[i] < m[i]) fail(ErrorKind::Structural, "monomial does not divide polynomial");
      ne[i] -= m[i];
    }
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first: iterate graded-lex descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;

    const bool has_vars = exponent_sum(e) > 0;
    if (a != 1 || !has_vars) {
      out << a.get_str();
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << (*vars_)[i];
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

}  // namespace arithdyn
