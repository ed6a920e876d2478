#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arithdyn/error.hpp"
#include "arithdyn/matrix.hpp"
#include "arithdyn/modp.hpp"
#include "arithdyn/multipoly.hpp"
#include "arithdyn/poly_gcd.hpp"
#include "arithdyn/poly_parser.hpp"
#include "test_util.hpp"

using namespace arithdyn;
using testutil::random_integer_point;
using testutil::random_poly;

namespace {

MultiPoly P(const char* text, const VarListPtr& vars) { return parse_poly(text, vars); }

// Independent rank oracle: plain rational Gauss elimination, no shared code
// with the fraction-free path under test.
std::size_t oracle_rank(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("ring operations on textbook identities") {
  auto vars = make_vars({"x", "y"});
  CHECK(P("x+y", vars) * P("x-y", vars) == P("x^2-y^2", vars));
  CHECK(P("x+1", vars).pow(0) == P("1", vars));
  // (2x+3y)^2 expanded by hand.
  CHECK(P("2x+3y", vars).pow(2) == P("4x^2+12*x*y+9y^2", vars));
}

TEST_CASE("degree bookkeeping") {
  auto vars = make_vars({"x", "y"});
  CHECK_FALSE(MultiPoly::zero(vars).total_degree().has_value());
  CHECK(P("1", vars).total_degree() == 0);
  CHECK(P("x^2*y + y", vars).total_degree() == 3);
  // Degree is additive for products of nonzero polynomials.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    MultiPoly a = random_poly(rng, vars, 4, 4);
    MultiPoly b = random_poly(rng, vars, 4, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(*(a * b).total_degree() == *a.total_degree() + *b.total_degree());
  }
}

TEST_CASE("ring axioms hold exactly on random sparse polynomials") {
  auto vars = make_vars({"x", "y", "z"});
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    MultiPoly a = random_poly(rng, vars, 5, 5);
    MultiPoly b = random_poly(rng, vars, 5, 5);
    MultiPoly c = random_poly(rng, vars, 5, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == MultiPoly::zero(vars));
  }
}

TEST_CASE("composition") {
  auto vars = make_vars({"x", "y"});
  SUBCASE("coordinate swap") {
    MultiPoly p = P("x^2 + y", vars);
    std::vector<MultiPoly> subs = {P("y", vars), P("x", vars)};
    CHECK(p.compose(subs) == P("y^2 + x", vars));
  }
  SUBCASE("identity coordinate") {
    auto uni = make_vars({"x"});
    MultiPoly p = MultiPoly::variable(uni, 0);
    CHECK(p.compose({P("x+1", uni)}) == P("x+1", uni));
  }
  SUBCASE("second map component under self-substitution") {
    // (y^2+x) with x <- y, y <- y^2+x, expanded by hand.
    MultiPoly p = P("y^2 + x", vars);
    std::vector<MultiPoly> subs = {P("y", vars), P("y^2 + x", vars)};
    CHECK(p.compose(subs) == P("(y^2+x)^2 + y", vars));
    CHECK(p.compose(subs) == P("y^4 + 2x*y^2 + x^2 + y", vars));
  }
  SUBCASE("homogeneous compose multiplies degrees") {
    auto hv = make_vars({"X", "Y", "Z"});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      MultiPoly p = testutil::random_homogeneous(rng, hv, 3, 4);
      std::vector<MultiPoly> subs;
      for (int k = 0; k < 3; ++k) subs.push_back(testutil::random_homogeneous(rng, hv, 2, 3));
      MultiPoly q = p.compose(subs);
      if (!q.is_zero()) {
        CHECK(q.is_homogeneous());
        CHECK(*q.total_degree() == 6);
      }
    }
  }
  SUBCASE("arity mismatch is a structural error") {
    MultiPoly p = P("x + y", vars);
    CHECK_THROWS_AS(p.compose({P("x", vars)}), Error);
  }
}

TEST_CASE("polynomial gcd") {
  auto vars = make_vars({"x", "y", "z"});
  SUBCASE("factored difference of squares") {
    CHECK(poly_gcd(P("x^2 - y^2", vars), P("x - y", vars)) == P("x - y", vars));
  }
  SUBCASE("monomial gcd") { CHECK(poly_gcd(P("x*z", vars), P("x^2", vars)) == P("x", vars)); }
  SUBCASE("coprime inputs") {
    CHECK(poly_gcd(P("x^2 + 1", vars), P("y^2 + 1", vars)) == P("1", vars));
  }
  SUBCASE("gcd with zero is the primitive part") {
    CHECK(poly_gcd(P("4x + 4y", vars), MultiPoly::zero(vars)) == P("x + y", vars));
    CHECK(poly_gcd(MultiPoly::zero(vars), MultiPoly::zero(vars)) == MultiPoly::zero(vars));
  }
  SUBCASE("result is primitive with positive leading coefficient") {
    CHECK(poly_gcd(P("-2x^2 + 2y^2", vars), P("-4x - 4y", vars)) == P("x + y", vars));
  }
}

TEST_CASE("gcd respects planted common factors") {
  auto vars = make_vars({"x", "y"});
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 100) {
    MultiPoly p = random_poly(rng, vars, 3, 3, false);
    MultiPoly r = random_poly(rng, vars, 2, 2, false);
    MultiPoly g = random_poly(rng, vars, 3, 3, false);
    if (p.is_constant() || g.is_zero()) continue;
    // q = p*r + 1 is coprime to p by construction: any common divisor
    // divides 1.
    MultiPoly q = p * r + MultiPoly::constant(vars, Rational(1));
    MultiPoly got = poly_gcd(p * g, q * g);
    CHECK(got == g.canonical());
    ++done;
  }
}

TEST_CASE("exact division") {
  auto vars = make_vars({"x", "y"});
  MultiPoly p = P("x^2 - y^2", vars);
  auto q = poly_divide_exact(p, P("x - y", vars));
  REQUIRE(q.has_value());
  CHECK(*q == P("x + y", vars));
  CHECK_FALSE(poly_divide_exact(p, P("x + 1", vars)).has_value());
}

TEST_CASE("reduction mod p") {
  auto vars = make_vars({"x"});
  SUBCASE("half reduces by the inverse of 2") {
    PolyModP r = poly_mod_p(P("3x + 1/2", vars), 5);
    REQUIRE(r.terms.size() == 2);
    CHECK(r.eval({0}) == 3);  // constant term 1/2 = 3 in F_5
    CHECK(r.eval({1}) == (3 + 3) % 5);
  }
  SUBCASE("integer coefficients pass through") {
    PolyModP r = poly_mod_p(P("x^2", vars), 7);
    CHECK(r.terms.size() == 1);
    CHECK(r.eval({3}) == 2);
  }
  SUBCASE("bad prime names the coefficient") {
    try {
      poly_mod_p(P("1/3*x", vars), 3);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("1/3") != std::string::npos);
    }
  }
  SUBCASE("evaluation commutes with reduction on random points") {
    auto v3 = make_vars({"x", "y", "z"});
    std::mt19937_64 rng(5);
    const std::uint64_t p = 1000003;
    for (int i = 0; i < 100; ++i) {
      MultiPoly poly = random_poly(rng, v3, 4, 6, false);
      PolyModP red = poly_mod_p(poly, p);
      std::vector<Integer> pt = random_integer_point(rng, 3);
      std::vector<std::uint64_t> ptp;
      for (const auto& z : pt) ptp.push_back(residue_mod_p(z, p));
      const Rational exact = poly.eval(pt);
      CHECK(*residue_mod_p(exact, p) == red.eval(ptp));
    }
  }
}

TEST_CASE("nullspace") {
  SUBCASE("identity has full column rank") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    CHECK(nullspace(m).empty());
  }
  SUBCASE("rank-one 2x2") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 2;
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(-1)});
  }
  SUBCASE("random 3x4 of rank 3, verified by multiplying back") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int rep = 0; rep < 20; ++rep) {
      ExactMatrix m(3, 4);
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = make_rational(entry(rng), 1 + rep % 3);
      }
      const std::size_t rank = oracle_rank(m);
      auto basis = nullspace(m);
      CHECK(basis.size() == 4 - rank);
      for (const auto& v : basis) {
        for (std::size_t r = 0; r < 3; ++r) {
          Rational dot(0);
          for (std::size_t c = 0; c < 4; ++c) dot += m.at(r, c) * v[c];
          CHECK(dot == 0);
        }
      }
    }
  }
}

TEST_CASE("polynomial text grammar") {
  auto vars = make_vars({"x", "y", "z"});
  SUBCASE("the reference form parses") {
    MultiPoly p = P("3/2*x^2*y - z + 1", vars);
    CHECK(p.coefficient({2, 1, 0}) == make_rational(3, 2));
    CHECK(p.coefficient({0, 0, 1}) == -1);
    CHECK(p.constant_term() == 1);
  }
  SUBCASE("star is optional between coefficient and variable") {
    CHECK(P("3x", vars) == P("3*x", vars));
    CHECK(P("2(x+y)", vars) == P("2x + 2y", vars));
  }
  SUBCASE("whitespace insensitive") {
    CHECK(P("  3/2 * x ^ 2\n* y - z + 1 ", vars) == P("3/2*x^2*y-z+1", vars));
  }
  SUBCASE("round trip through to_string") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
      MultiPoly p = random_poly(rng, vars, 5, 6);
      CHECK(P(p.to_string().c_str(), vars) == p);
    }
  }
  SUBCASE("errors carry line and column") {
    try {
      P("x + \n q", vars);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(P("x ^ y", vars), Error);
    CHECK_THROWS_AS(P("x / y", vars), Error);
    CHECK_THROWS_AS(P("(x + y", vars), Error);
  }
}

TEST_CASE("canonical form") {
  auto vars = make_vars({"x", "y"});
  // Content removed, leading coefficient positive under graded-lex.
  CHECK(P("-2x^2 + 4y", vars).canonical() == P("x^2 - 2y", vars));
  CHECK(P("1/2*x + 1/3", vars).canonical() == P("3x + 2", vars));
}
