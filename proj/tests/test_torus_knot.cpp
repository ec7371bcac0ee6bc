#include <numeric>

#include "doctest.h"
#include "knotpoly/error.hpp"
#include "knotpoly/torus_knot.hpp"
#include "oracles.hpp"

using namespace knotpoly;

namespace {

LaurentPoly P(std::string_view s) { return parse_laurent(s); }

LaurentPoly from_centred(const std::map<std::int64_t, std::int64_t>& m) {
  LaurentPoly::TermMap t;
  for (auto [e, c] : m) t[e] = c;
  return LaurentPoly(std::move(t));
}

}  // namespace

TEST_CASE("construction and canonical form") {
  const TorusKnot k(2, 3);
  CHECK(k.a() == 3);
  CHECK(k.b() == 2);
  CHECK_FALSE(k.input_canonical());
  CHECK(TorusKnot(3, 2).input_canonical());
  CHECK(TorusKnot(2, -5) == TorusKnot(-5, 2));
  CHECK(TorusKnot(-2, -5) == TorusKnot(5, 2));
  CHECK(TorusKnot::parse(" T( -7 , 3 ) ") == TorusKnot(-7, 3));
  CHECK(to_string(TorusKnot(3, 2)) == "T(3,2)");
  CHECK_THROWS_AS(TorusKnot(2, 2), Error);
  CHECK_THROWS_AS(TorusKnot(6, 4), Error);
  CHECK_THROWS_AS(TorusKnot(1, 5), Error);
  CHECK_THROWS_AS(TorusKnot(0, 5), Error);
  CHECK_THROWS_AS(TorusKnot::parse("T(3;2)"), Error);
  CHECK_THROWS_AS(TorusKnot::parse("T(3,2"), Error);
  CHECK_THROWS_AS(TorusKnot::parse("T(x,2)"), Error);
}

TEST_CASE("alexander goldens match the long-division oracle") {
  // Frozen from oracle::torus_by_division, centred.
  CHECK(alexander(TorusKnot(3, 2)) == P("t - 1 + t^-1"));
  CHECK(alexander(TorusKnot(5, 2)) == P("t^2 - t + 1 - t^-1 + t^-2"));
  CHECK(alexander(TorusKnot(4, 3)) == P("t^3 - t^2 + 1 - t^-2 + t^-3"));
  for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {4, 3}}) {
    CHECK(alexander(TorusKnot(p, q)) ==
          from_centred(oracle::centred(oracle::torus_by_division(p, q))));
  }
}

TEST_CASE("leading_form instances") {
  CHECK(leading_form(TorusKnot(4, 3)) == P("t^3 - t^2 + 1 - t^-1"));
  CHECK(leading_form(TorusKnot(3, 2)) == P("t - 1 + t^-1 - t^-2"));
  CHECK(leading_form(TorusKnot(7, 2)) ==
        P("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3 - t^-4"));
}

TEST_CASE("genus") {
  CHECK(genus(TorusKnot(3, 2)) == 1);
  CHECK(genus(TorusKnot(35, 3)) == 34);
  CHECK(genus(TorusKnot(-35, 3)) == 34);
}

TEST_CASE("enhanced A-polynomial closed forms") {
  CHECK(enhanced_apoly(TorusKnot(3, 2)) == parse_bipoly("1 + M^6*L"));
  CHECK(enhanced_apoly(TorusKnot(4, 3)) == parse_bipoly("-1 + M^24*L^2"));
  CHECK(enhanced_apoly(TorusKnot(-3, 2)) == parse_bipoly("M^6 + L"));
  CHECK(enhanced_apoly(TorusKnot(-4, 3)) == parse_bipoly("-M^24 + L^2"));
  CHECK(to_string(enhanced_apoly(TorusKnot(4, 3))) == "1 - M^24*L^2");
  CHECK(enhanced_apoly(TorusKnot(2, 7)) == enhanced_apoly(TorusKnot(7, 2)));
  CHECK(enhanced_apoly(TorusKnot(3, 8)) == enhanced_apoly(TorusKnot(8, 3)));
}

TEST_CASE("abelian slope family") {
  const auto fam = abelian_slope_family(TorusKnot(3, 2), 3);
  REQUIRE(fam.slopes.size() == 3);
  CHECK(fam.slopes[0] == Rational(7));
  CHECK(fam.slopes[1] == Rational(13, 2));
  CHECK(fam.slopes[2] == Rational(19, 3));
  CHECK(fam.limit == Rational(6));
  const auto fam5 = abelian_slope_family(TorusKnot(5, 2), 1);
  CHECK(fam5.slopes == std::vector<Rational>{Rational(11)});
  CHECK(fam5.limit == Rational(10));
  CHECK(to_string(fam.slopes[1]) == "13/2");
  const auto mirror = abelian_slope_family(TorusKnot(-3, 2), 2);
  CHECK(mirror.slopes[1] == Rational(-11, 2));
  CHECK(mirror.slopes[1].denominator() > 0);
  CHECK_THROWS_AS(abelian_slope_family(TorusKnot(3, 2), 0), Error);
}

TEST_CASE("torus polynomial properties for 2 <= q < p <= 40") {
  int pairs = 0;
  for (std::int64_t p = 3; p <= 40; ++p) {
    for (std::int64_t q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const TorusKnot k(p, q);
      const LaurentPoly delta = alexander(k);
      const std::int64_t g = genus(k);
      CAPTURE(p);
      CAPTURE(q);
      REQUIRE(delta.span() == std::pair<Exponent, Exponent>{-g, g});
      CHECK(delta.value_at_one() == 1);
      CHECK(delta == from_centred(oracle::centred(oracle::torus_by_semigroup(p, q))));
      CHECK(alexander(k.mirror()) == delta);

      int last_sign = 0;
      for (auto it = delta.terms().rbegin(); it != delta.terms().rend(); ++it) {
        const int sign = it->second > 0 ? 1 : -1;
        CHECK(abs(it->second) == 1);
        CHECK(sign != last_sign);
        last_sign = sign;
      }

      const LaurentPoly lead = leading_form(k);
      for (Exponent e = g - p + 1; e <= g; ++e) {
        CHECK(lead.coefficient(e) == delta.coefficient(e));
      }
    }
  }
  CHECK(pairs == 450);
}
