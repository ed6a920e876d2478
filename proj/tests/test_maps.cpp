#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arithdyn/error.hpp"
#include "arithdyn/maps.hpp"
#include "arithdyn/poly_parser.hpp"
#include "arithdyn/zoo.hpp"
#include "test_util.hpp"

using namespace arithdyn;

namespace {

ZooMap henon(long a, long b) {
  ZooParams p;
  p.scalars["a"] = Rational(a);
  p.scalars["b"] = Rational(b);
  return zoo_get("henon", p);
}

ZooMap gs02(long d) {
  ZooParams p;
  p.scalars["d"] = Rational(d);
  return zoo_get("gs02", p);
}

ZooMap monomial(std::vector<std::vector<std::int64_t>> m) {
  ZooParams p;
  p.matrix = std::move(m);
  return zoo_get("monomial", p);
}

ProjRationalMap proj_from(const char* c0, const char* c1, const char* c2, const VarListPtr& v) {
  return ProjRationalMap::saturate({parse_poly(c0, v), parse_poly(c1, v), parse_poly(c2, v)});
}

}  // namespace

TEST_CASE("homogenization") {
  SUBCASE("henon a=1 b=0 lifts to [YZ : Y^2+XZ : Z^2]") {
    ProjRationalMap f = homogenize(*henon(1, 0).affine);
    auto pv = make_vars({"X", "Y", "Z"});
    CHECK(f.degree() == 2);
    CHECK(f == proj_from("Y*Z", "Y^2 + X*Z", "Z^2", pv));
  }
  SUBCASE("identity lifts to [X : Y : Z]") {
    auto av = make_vars({"x", "y"});
    AffinePolyMap id({MultiPoly::variable(av, 0), MultiPoly::variable(av, 1)});
    ProjRationalMap f = homogenize(id);
    CHECK(f.degree() == 1);
    CHECK(f.is_identity());
  }
  SUBCASE("gs02 d=2 lifts to the degree-3 quadruple") {
    ProjRationalMap f = homogenize(*gs02(2).affine);
    CHECK(f.degree() == 3);
    auto pv = make_vars({"X", "Y", "Z", "W"});
    ProjRationalMap expected = ProjRationalMap::saturate(
        {parse_poly("Y*X^2 + Z*W^2", pv), parse_poly("Y^3 + X*W^2", pv),
         parse_poly("Y*W^2", pv), parse_poly("W^3", pv)});
    CHECK(f == expected);
  }
  SUBCASE("constant maps are rejected") {
    auto av = make_vars({"x"});
    AffinePolyMap c({MultiPoly::constant(av, Rational(5))});
    CHECK_THROWS_AS(homogenize(c), Error);
  }
}

TEST_CASE("saturation") {
  auto pv = make_vars({"X", "Y", "Z"});
  SUBCASE("common factor X is divided out") {
    ProjRationalMap f = proj_from("X*Z", "X^2", "X*Y", pv);
    CHECK(f.degree() == 1);
    CHECK(f == proj_from("Z", "X", "Y", pv));
  }
  SUBCASE("coprime tuples are unchanged up to scaling") {
    ProjRationalMap f = proj_from("2Y*Z", "2Y^2 + 2X*Z", "2Z^2", pv);
    CHECK(f == proj_from("Y*Z", "Y^2 + X*Z", "Z^2", pv));
    CHECK(f.degree() == 2);
  }
  SUBCASE("all-zero tuple rejected") {
    auto z = MultiPoly::zero(pv);
    CHECK_THROWS_AS(ProjRationalMap::saturate({z, z, z}), Error);
  }
  SUBCASE("idempotence on random tuples with planted factors") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      MultiPoly g = testutil::random_homogeneous(rng, pv, 1 + i % 3, 3);
      // Two coprime fixed components keep the planted g the exact gcd.
      std::vector<MultiPoly> tuple = {testutil::random_homogeneous(rng, pv, 2, 3) * g,
                                      parse_poly("X^2", pv) * g, parse_poly("Y^2", pv) * g};
      ProjRationalMap once = ProjRationalMap::saturate(tuple);
      ProjRationalMap twice = ProjRationalMap::saturate(once.components());
      CHECK(once == twice);
      CHECK(once.degree() == 2);
    }
  }
}

TEST_CASE("composition and iteration") {
  auto pv = make_vars({"X", "Y", "Z"});
  const ZooMap cremona = zoo_get("cremona", {});
  SUBCASE("cremona composed with itself drops from degree 4 to the identity") {
    const ProjRationalMap sigma = *cremona.projective;
    CHECK(sigma.degree() == 2);
    ProjRationalMap square = sigma.compose(sigma);
    CHECK(square.degree() == 1);
    CHECK(square.is_identity());
  }
  SUBCASE("identity is neutral") {
    ProjRationalMap f = homogenize(*henon(1, 0).affine);
    ProjRationalMap id = ProjRationalMap::identity(f.vars());
    CHECK(id.compose(f) == f);
    CHECK(f.compose(id) == f);
  }
  SUBCASE("henon squared has degree 4, no cancellation") {
    ProjRationalMap f = homogenize(*henon(1, 0).affine);
    CHECK(f.compose(f).degree() == 4);
  }
  SUBCASE("iterate(1) is the map, cremona^2 the identity") {
    ProjRationalMap f = homogenize(*henon(1, 0).affine);
    CHECK(f.iterate(1) == f);
    CHECK(cremona.projective->iterate(2).is_identity());
  }
  SUBCASE("gs02 d=2 second iterate has degree 9") {
    ProjRationalMap f = homogenize(*gs02(2).affine);
    CHECK(f.iterate(2).degree() == 9);
  }
  SUBCASE("iterate(m+n) = iterate(m) o iterate(n) on zoo maps") {
    for (const ProjRationalMap& f :
         {homogenize(*henon(1, 0).affine), *cremona.projective,
          homogenize(*monomial({{1, 1}, {1, 0}}).affine)}) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
          CHECK(f.iterate(m + n) == f.iterate(m).compose(f.iterate(n)));
        }
      }
    }
  }
}

TEST_CASE("projective evaluation") {
  const ProjRationalMap sigma = *zoo_get("cremona", {}).projective;
  SUBCASE("indeterminate at a coordinate point") {
    auto r = sigma.evaluate(ProjPoint::parse("[1:0:0]"));
    CHECK_FALSE(r.has_value());
  }
  SUBCASE("fixed point of the involution") {
    auto r = sigma.evaluate(ProjPoint::parse("[1:1:1]"));
    REQUIRE(r.has_value());
    CHECK(*r == ProjPoint::parse("[1:1:1]"));
  }
  SUBCASE("henon extension moves [1:2:1] to [2:5:1]") {
    ProjRationalMap f = homogenize(*henon(1, 0).affine);
    auto r = f.evaluate(ProjPoint::parse("[1:2:1]"));
    REQUIRE(r.has_value());
    CHECK(*r == ProjPoint::parse("[2:5:1]"));
  }
}

TEST_CASE("affine evaluation") {
  SUBCASE("henon at (1,2)") {
    AffinePoint p = henon(1, 0).affine->evaluate(AffinePoint::parse("(1, 2)"));
    CHECK(p == AffinePoint::parse("(2, 5)"));
  }
  SUBCASE("shift at 0") {
    CHECK(zoo_get("shift", {}).affine->evaluate(AffinePoint::parse("(0)")) ==
          AffinePoint::parse("(1)"));
  }
  SUBCASE("gs02 d=2 at (1,1,1)") {
    CHECK(gs02(2).affine->evaluate(AffinePoint::parse("(1,1,1)")) ==
          AffinePoint::parse("(2, 2, 1)"));
  }
}

TEST_CASE("zoo construction and validation") {
  SUBCASE("henon inverse solves the preimage") {
    ZooMap h = henon(1, 0);
    auto av = make_vars({"x", "y"});
    REQUIRE(h.affine_inverse.has_value());
    CHECK(h.affine_inverse->components()[0] == parse_poly("y - x^2", av));
    CHECK(h.affine_inverse->components()[1] == parse_poly("x", av));
  }
  SUBCASE("gs02 components match the family definition") {
    ZooMap g = gs02(2);
    auto av = make_vars({"x", "y", "z"});
    CHECK(g.affine->components()[0] == parse_poly("y*x^2 + z", av));
    CHECK(g.affine->components()[1] == parse_poly("y^3 + x", av));
    CHECK(g.affine->components()[2] == parse_poly("y", av));
    REQUIRE(g.affine_inverse.has_value());
    CHECK(g.affine_inverse->components()[0] == parse_poly("y - z^3", av));
    CHECK(g.affine_inverse->components()[1] == parse_poly("z", av));
    CHECK(g.affine_inverse->components()[2] == parse_poly("x - z*(y - z^3)^2", av));
  }
  SUBCASE("monomial matrix convention") {
    ZooMap m = monomial({{1, 1}, {1, 0}});
    auto av = make_vars({"x", "y"});
    REQUIRE(m.affine.has_value());
    CHECK(m.affine->components()[0] == parse_poly("x*y", av));
    CHECK(m.affine->components()[1] == parse_poly("x", av));
  }
  SUBCASE("invalid parameters are rejected by name") {
    ZooParams bad;
    bad.scalars["a"] = Rational(0);
    CHECK_THROWS_WITH_AS(zoo_get("henon", bad), "henon needs a != 0", Error);
    ZooParams d0;
    d0.scalars["d"] = Rational(0);
    CHECK_THROWS_AS(zoo_get("gs02", d0), Error);
    ZooParams sing;
    sing.matrix = {{1, 1}, {1, 1}};
    CHECK_THROWS_AS(zoo_get("monomial", sing), Error);
    CHECK_THROWS_AS(zoo_get("no-such-map", {}), Error);
  }
}

TEST_CASE("inverse checks") {
  SUBCASE("henon pair cancels symbolically") {
    ZooMap h = henon(1, 0);
    CHECK(inverse_check(*h.affine, *h.affine_inverse));
  }
  SUBCASE("gs02 d=2 pair") {
    ZooMap g = gs02(2);
    CHECK(inverse_check(*g.affine, *g.affine_inverse));
  }
  SUBCASE("squaring map is not its own inverse") {
    ZooMap sq = monomial({{2, 0}, {0, 2}});
    CHECK_FALSE(inverse_check(*sq.affine, *sq.affine));
  }
  SUBCASE("projective inverse check through saturation") {
    ZooMap h = henon(1, 0);
    CHECK(inverse_check(homogenize(*h.affine), homogenize(*h.affine_inverse)));
  }
}

TEST_CASE("evaluation commutes with composition away from indeterminacy") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coord(-30, 30);
  std::vector<ProjRationalMap> maps = {homogenize(*henon(1, 0).affine),
                                       homogenize(*henon(2, -3).affine),
                                       *zoo_get("cremona", {}).projective,
                                       homogenize(*monomial({{1, 1}, {1, 0}}).affine)};
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      int tested = 0;
      while (tested < 50) {
        std::vector<Integer> coords;
        for (int i = 0; i < 3; ++i) coords.emplace_back(coord(rng));
        bool all_zero = true;
        for (const auto& c : coords) all_zero &= c == 0;
        if (all_zero) continue;
        ProjPoint p = ProjPoint::from_integers(coords);
        auto gp = g.evaluate(p);
        if (!gp) {
          ++tested;
          continue;
        }
        auto fgp = f.evaluate(*gp);
        auto composed = f.compose(g).evaluate(p);
        if (!fgp) {
          ++tested;
          continue;  // intermediate indeterminacy: composed may still resolve
        }
        REQUIRE(composed.has_value());
        CHECK(*composed == *fgp);
        ++tested;
      }
    }
  }
}

TEST_CASE("monomial iterates follow matrix powers") {
  auto matpow = [](std::vector<std::vector<std::int64_t>> m, int n) {
    std::vector<std::vector<std::int64_t>> r = {{1, 0}, {0, 1}};
    for (int k = 0; k < n; ++k) {
      std::vector<std::vector<std::int64_t>> t(2, std::vector<std::int64_t>(2, 0));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int l = 0; l < 2; ++l) t[i][j] += r[i][l] * m[l][j];
        }
      }
      r = std::move(t);
    }
    return r;
  };
  const std::vector<std::vector<std::int64_t>> m = {{1, 1}, {1, 0}};
  ZooMap base = monomial(m);
  for (int n = 2; n <= 4; ++n) {
    ZooMap powd = monomial(matpow(m, n));
    AffinePolyMap iterated = *base.affine;
    for (int k = 1; k < n; ++k) iterated = base.affine->compose(iterated);
    CHECK(iterated == *powd.affine);
    CHECK(homogenize(*base.affine).iterate(n) == homogenize(*powd.affine));
  }
}

TEST_CASE("cremona as a negative monomial map") {
  ZooMap viaMatrix = monomial({{-1, 0}, {0, -1}});
  CHECK_FALSE(viaMatrix.affine.has_value());
  REQUIRE(viaMatrix.projective.has_value());
  CHECK(*viaMatrix.projective == *zoo_get("cremona", {}).projective);
  REQUIRE(viaMatrix.projective_inverse.has_value());
  CHECK(inverse_check(*viaMatrix.projective, *viaMatrix.projective_inverse));
}
