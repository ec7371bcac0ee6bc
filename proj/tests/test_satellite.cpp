#include <numeric>

#include "doctest.h"
#include "knotpoly/error.hpp"
#include "knotpoly/satellite.hpp"
#include "knotpoly/torus_knot.hpp"
#include "oracles.hpp"

using namespace knotpoly;

namespace {

LaurentPoly P(std::string_view s) { return parse_laurent(s); }
LaurentPoly delta(std::int64_t a, std::int64_t b) { return alexander(TorusKnot(a, b)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::invalid_argument;
}

std::map<std::int64_t, std::int64_t> to_map(const LaurentPoly& f) {
  std::map<std::int64_t, std::int64_t> m;
  for (const auto& [e, c] : f.terms()) m[e] = static_cast<std::int64_t>(c);
  return m;
}

}  // namespace

TEST_CASE("satellite_alexander") {
  const LaurentPoly trefoil = delta(3, 2);
  CHECK(satellite_alexander(SatelliteSpec(trefoil, trefoil, 1)) ==
        P("t^2 - 2t + 3 - 2t^-1 + t^-2"));
  CHECK(satellite_alexander(SatelliteSpec(trefoil, LaurentPoly::constant(1), 2)) ==
        trefoil);
  const LaurentPoly k = satellite_alexander(SatelliteSpec(delta(7, 2), trefoil, 3));
  CHECK(k.coefficient(3) == -2);
  CHECK(k.max_exponent() == 6);
  CHECK(k.value_at_one() == 1);
}

TEST_CASE("satellite_genus") {
  const LaurentPoly trefoil = delta(3, 2);
  CHECK(satellite_genus(SatelliteSpec(trefoil, trefoil, 2)) == 3);
  CHECK(satellite_genus(SatelliteSpec(delta(7, 2), trefoil, 3)) == 6);
  CHECK(satellite_genus(SatelliteSpec(trefoil, LaurentPoly::constant(1), 5)) == 1);
}

TEST_CASE("satellite input validation") {
  const LaurentPoly trefoil = delta(3, 2);
  CHECK_THROWS_AS(SatelliteSpec(trefoil, trefoil, 0), Error);
  CHECK_THROWS_AS(SatelliteSpec(P("t^2 - t + 1"), trefoil, 1), Error);
  CHECK_THROWS_AS(SatelliteSpec(-trefoil, trefoil, 1), Error);
  CHECK_THROWS_AS(SatelliteSpec(trefoil, 2, trefoil, 1, 1), Error);
  CHECK_NOTHROW(SatelliteSpec(trefoil, 1, trefoil, 1, 4));
}

TEST_CASE("lspace_admissible") {
  CHECK(lspace_admissible(P("t - 1 + t^-1")).verdict == Admissibility::admissible);
  CHECK_FALSE(lspace_admissible(P("t - 1 + t^-1")).witness_exponent.has_value());

  const auto mag = lspace_admissible(P("t^2 - 2t + 3 - 2t^-1 + t^-2"));
  CHECK(mag.verdict == Admissibility::fails_magnitude);
  CHECK(mag.witness_exponent == 1);

  const auto alt = lspace_admissible(P("t^2 - t - 1 - t^-1 + t^-2"));
  CHECK(alt.verdict == Admissibility::fails_alternation);
  CHECK(alt.witness_exponent == 0);
  CHECK(alt.witness_coefficients.size() == 2);

  const auto top = lspace_admissible(P("t^2 - 1 + t^-2"));
  CHECK(top.verdict == Admissibility::fails_top_two);
  CHECK(top.witness_exponent == 2);

  CHECK(lspace_admissible(P("1")).verdict == Admissibility::admissible);
  CHECK(kind_of([] { lspace_admissible(P("t^2 - t + 1")); }) == ErrorKind::precondition);
  CHECK(kind_of([] { lspace_admissible(LaurentPoly{}); }) == ErrorKind::precondition);
}

TEST_CASE("check_winding_residue examples") {
  const LaurentPoly trefoil = delta(3, 2);

  const auto mag = check_winding_residue(7, 2, 3, trefoil);
  CHECK(mag.violation == CoefficientViolation::magnitude);
  CHECK(mag.exponents == std::vector<Exponent>{3});
  CHECK(mag.coefficients == std::vector<Integer>{-2});
  CHECK(mag.product.coefficient(6) == 1);
  CHECK(mag.product.coefficient(5) == -1);
  CHECK(mag.product.coefficient(4) == 1);

  const auto same = check_winding_residue(5, 3, 2, trefoil);
  CHECK(same.violation == CoefficientViolation::same_sign);
  CHECK(same.exponents == std::vector<Exponent>{5, 4});
  CHECK(same.product.coefficient(6) == 1);

  const auto none = check_winding_residue(7, 2, 2, trefoil);
  CHECK(none.violation == CoefficientViolation::none);
  CHECK(lspace_admissible(none.product).verdict == Admissibility::admissible);
}

TEST_CASE("check_winding_residue preconditions") {
  const LaurentPoly trefoil = delta(3, 2);
  CHECK(kind_of([&] { check_winding_residue(2, 3, 1, trefoil); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { check_winding_residue(6, 4, 1, trefoil); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { check_winding_residue(7, 2, 7, trefoil); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { check_winding_residue(7, 2, 0, trefoil); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { check_winding_residue(7, 2, 1, LaurentPoly::constant(1)); }) ==
        ErrorKind::precondition);
  CHECK(kind_of([&] { check_winding_residue(7, 2, 1, trefoil * trefoil); }) ==
        ErrorKind::precondition);
}

TEST_CASE("torus_pattern_obstruction examples") {
  const LaurentPoly trefoil = delta(3, 2);
  const auto r1 = torus_pattern_obstruction(3, 2, 1, trefoil);
  CHECK(r1.verdict == ObstructionVerdict::obstructed);
  REQUIRE(r1.check.has_value());
  CHECK(r1.check->violation == CoefficientViolation::magnitude);
  CHECK(r1.check->product == P("t^2 - 2t + 3 - 2t^-1 + t^-2"));

  const auto r2 = torus_pattern_obstruction(8, 3, 2, trefoil);
  CHECK(r2.verdict == ObstructionVerdict::obstructed);
  CHECK(r2.check->violation == CoefficientViolation::same_sign);

  CHECK(kind_of([&] { torus_pattern_obstruction(9, 2, 2, trefoil); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { torus_pattern_obstruction(9, 2, 0, trefoil); }) == ErrorKind::precondition);
}

TEST_CASE("winding residue agrees with an independent product scan (a <= 12)") {
  std::vector<std::pair<std::int64_t, std::int64_t>> companions;
  for (std::int64_t p = 3; p <= 7; ++p)
    for (std::int64_t q = 2; q < p; ++q)
      if (std::gcd(p, q) == 1) companions.emplace_back(p, q);

  for (std::int64_t a = 3; a <= 12; ++a) {
    for (std::int64_t b = 2; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t w = 1; w < a; ++w) {
        for (auto [p, q] : companions) {
          CAPTURE(a); CAPTURE(b); CAPTURE(w); CAPTURE(p); CAPTURE(q);
          const LaurentPoly companion = delta(p, q);
          const auto check = check_winding_residue(a, b, w, companion);

          // Product rebuilt with the oracle convolution on int64 maps.
          std::map<std::int64_t, std::int64_t> dilated;
          for (auto [e, c] : to_map(companion)) dilated[e * w] = c;
          const auto product = oracle::convolve(to_map(delta(a, b)), dilated);
          CHECK(product == to_map(check.product));

          const auto scan = lspace_admissible(check.product);
          switch (check.violation) {
            case CoefficientViolation::none:
              CHECK(w % b == 0);
              CHECK(scan.verdict == Admissibility::admissible);
              break;
            case CoefficientViolation::magnitude:
              CHECK(w % b == 1);
              CHECK(scan.verdict == Admissibility::fails_magnitude);
              CHECK(scan.witness_exponent == check.exponents[0]);
              break;
            case CoefficientViolation::same_sign:
              CHECK(w % b >= 2);
              CHECK(scan.verdict == Admissibility::fails_alternation);
              CHECK(scan.witness_coefficients[0].first == check.exponents[0]);
              CHECK(scan.witness_coefficients[1].first == check.exponents[1]);
              break;
          }
        }
      }
    }
  }
}

TEST_CASE("torus_pattern_obstruction with w = 3 on T(9,2)") {
  const auto r = torus_pattern_obstruction(9, 2, 3, delta(3, 2));
  CHECK(r.verdict == ObstructionVerdict::obstructed);
}
