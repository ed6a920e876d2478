#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "arithdyn/enumerate.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/heights.hpp"

using namespace arithdyn;

TEST_CASE("normalization to the canonical representative") {
  SUBCASE("clear denominators, divide the gcd") {
    ProjPoint p = normalize({make_rational(1, 2), Rational(3), Rational(1)});
    CHECK(p == ProjPoint::parse("[1:6:2]"));
  }
  SUBCASE("gcd division") {
    ProjPoint p = normalize({Rational(0), Rational(5), Rational(0)});
    CHECK(p == ProjPoint::parse("[0:1:0]"));
  }
  SUBCASE("sign convention") {
    ProjPoint p = normalize({Rational(-2), Rational(-4)});
    CHECK(p == ProjPoint::parse("[1:2]"));
  }
  SUBCASE("all-zero rejected") {
    CHECK_THROWS_AS(normalize({Rational(0), Rational(0)}), Error);
  }
}

TEST_CASE("weil height") {
  SUBCASE("[2:3:5] has height log 5 with exact part 5") {
    HeightValue h = weil_height(ProjPoint::parse("[2:3:5]"));
    CHECK(h.max_abs_coord == 5);
    CHECK(h.log_value == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  }
  SUBCASE("[1:0] has height 0") {
    HeightValue h = weil_height(ProjPoint::parse("[1:0]"));
    CHECK(h.max_abs_coord == 1);
    CHECK(h.log_value == 0.0);
  }
  SUBCASE("height goes through normalization") {
    HeightValue h = weil_height(normalize({make_rational(1, 2), Rational(3)}));
    CHECK(h.max_abs_coord == 6);
    CHECK(h.log_value == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  }
}

TEST_CASE("h_plus clamps at 1") {
  CHECK(h_plus(ProjPoint::parse("[1:0]")).log_value == 1.0);
  CHECK(h_plus(ProjPoint::parse("[2:3:5]")).log_value ==
        doctest::Approx(std::log(5.0)).epsilon(1e-14));  // log 5 > 1
  CHECK(h_plus(ProjPoint::parse("[1:2]")).log_value == 1.0);  // log 2 < 1
}

TEST_CASE("projective invariance of the height under scaling") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 9);
  int done = 0;
  while (done < 100) {
    std::vector<Rational> v;
    for (int i = 0; i < 3; ++i) v.push_back(make_rational(num(rng), den(rng)));
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
    if (all_zero) continue;
    Rational lambda = make_rational(num(rng), den(rng));
    if (lambda == 0) continue;
    std::vector<Rational> scaled = v;
    for (auto& c : scaled) c *= lambda;
    CHECK(weil_height(normalize(v)).max_abs_coord ==
          weil_height(normalize(scaled)).max_abs_coord);
    ++done;
  }
}

TEST_CASE("bounded height enumeration") {
  SUBCASE("affine line within log 2") {
    auto pts = bounded_height_affine(1, HeightBound::from_log(std::log(2.0)));
    std::set<std::string> got;
    for (const auto& p : pts) got.insert(p.to_string());
    CHECK(got == std::set<std::string>{"(0)", "(1)", "(-1)", "(2)", "(-2)", "(1/2)", "(-1/2)"});
    CHECK(pts.size() == 7);
  }
  SUBCASE("projective line at height 0") {
    auto pts = bounded_height_projective(1, HeightBound::from_log(0.0));
    REQUIRE(pts.size() == 4);
    std::set<std::string> got;
    for (const auto& p : pts) got.insert(p.to_string());
    CHECK(got == std::set<std::string>{"[0:1]", "[1:0]", "[1:1]", "[1:-1]"});
  }
  SUBCASE("negative bound is empty") {
    CHECK(bounded_height_projective(2, HeightBound::from_log(-0.5)).empty());
    CHECK(bounded_height_affine(1, HeightBound::from_log(-0.5)).empty());
  }
  SUBCASE("deterministic order: by max coordinate, then lexicographic") {
    auto pts = bounded_height_affine(1, HeightBound::from_max_coord(Integer(2)));
    std::vector<std::string> got;
    for (const auto& p : pts) got.push_back(p.to_string());
    CHECK(got == std::vector<std::string>{"(0)", "(-1)", "(1)", "(-1/2)", "(1/2)", "(-2)", "(2)"});
  }
  SUBCASE("each point appears exactly once") {
    auto pts = bounded_height_projective(2, HeightBound::from_max_coord(Integer(6)));
    std::set<std::string> seen;
    for (const auto& p : pts) {
      CHECK(seen.insert(p.to_string()).second);
    }
  }
}

TEST_CASE("enumeration count matches the direct double loop") {
  // Oracle: affine points of the line with closure max coordinate <= M are
  // the fractions a/b, b >= 1, gcd(a, b) = 1, max(|a|, b) <= M.
  for (long M : {1L, 2L, 10L, 37L, 50L}) {
    long oracle = 0;
    for (long a = -M; a <= M; ++a) {
      for (long b = 1; b <= M; ++b) {
        if (std::gcd(std::abs(a), b) == 1 && std::max(std::abs(a), b) <= M) ++oracle;
      }
    }
    auto pts = bounded_height_affine(1, HeightBound::from_max_coord(Integer(M)));
    CHECK(static_cast<long>(pts.size()) == oracle);
  }
}

TEST_CASE("monotonicity in the bound") {
  auto small = bounded_height_projective(1, HeightBound::from_max_coord(Integer(5)));
  auto large = bounded_height_projective(1, HeightBound::from_max_coord(Integer(9)));
  std::set<std::string> big;
  for (const auto& p : large) big.insert(p.to_string());
  for (const auto& p : small) {
    CHECK(big.count(p.to_string()) == 1);
  }
  CHECK(small.size() < large.size());
}

TEST_CASE("height bound from a float log is self-consistent") {
  CHECK(HeightBound::from_log(std::log(100.0)).max_coord == 100);
  CHECK(HeightBound::from_log(std::log(2.0)).max_coord == 2);
  CHECK(HeightBound::from_log(0.0).max_coord == 1);
  CHECK(HeightBound::from_log(-1.0).max_coord == 0);
}

TEST_CASE("point serialization round trips") {
  CHECK(ProjPoint::parse("[12:-7:1]").to_string() == "[12:-7:1]");
  CHECK(AffinePoint::parse("(3/4, -2)").to_string() == "(3/4, -2)");
  CHECK(AffinePoint::parse("( 3/4 ,  -2 )") == AffinePoint::parse("(3/4,-2)"));
}
