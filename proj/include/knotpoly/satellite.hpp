#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Pattern polynomial Delta_{P(U)}, companion polynomial Delta_C and the
/// winding number w of a satellite P(C).
///
/// Both polynomials must be symmetrized (mirror-symmetric, value 1 at t = 1)
/// and each genus must equal the top exponent of its polynomial.
class SatelliteSpec {
 public:
  /// Derives the genera from the polynomials.
  SatelliteSpec(LaurentPoly pattern, LaurentPoly companion, std::int64_t winding);
  SatelliteSpec(LaurentPoly pattern, std::int64_t pattern_genus,
                LaurentPoly companion, std::int64_t companion_genus,
                std::int64_t winding);

  const LaurentPoly& pattern_poly() const noexcept { return pattern_; }
  const LaurentPoly& companion_poly() const noexcept { return companion_; }
  std::int64_t pattern_genus() const noexcept { return pattern_genus_; }
  std::int64_t companion_genus() const noexcept { return companion_genus_; }
  std::int64_t winding() const noexcept { return winding_; }

 private:
  LaurentPoly pattern_;
  LaurentPoly companion_;
  std::int64_t pattern_genus_;
  std::int64_t companion_genus_;
  std::int64_t winding_;
};

/// Delta_{P(U)}(t) * Delta_C(t^w), symmetrized.
LaurentPoly satellite_alexander(const SatelliteSpec& s);

/// g(P(U)) + w * g(C)
std::int64_t satellite_genus(const SatelliteSpec& s);

enum class Admissibility {
  admissible,
  fails_magnitude,    // some |coefficient| > 1
  fails_alternation,  // two consecutive nonzero coefficients share a sign
  fails_top_two,      // genus >= 1 but the t^{g-1} coefficient is zero
};

std::string_view to_string(Admissibility a) noexcept;

struct AdmissibilityReport {
  Admissibility verdict = Admissibility::admissible;
  std::optional<Exponent> witness_exponent;
  std::vector<std::pair<Exponent, Integer>> witness_coefficients;
};

/// Checks the coefficient conditions satisfied by Alexander polynomials of
/// instanton L-space knots.
///
/// Nonzero coefficients are scanned from the top exponent down; the first
/// exponent at which a condition fails decides the verdict (magnitude before
/// alternation before the top-two condition at the same exponent). For an
/// alternation failure the witness exponent is the lower of the pair.
/// Throws Error(precondition) unless f is nonzero and mirror-symmetric.
AdmissibilityReport lspace_admissible(const LaurentPoly& f);

enum class CoefficientViolation { none, magnitude, same_sign };

std::string_view to_string(CoefficientViolation v) noexcept;

struct WindingResidueCheck {
  CoefficientViolation violation = CoefficientViolation::none;
  /// Witness exponents in the product: one for a magnitude violation, the
  /// consecutive pair (upper, lower) for a same-sign violation, and for
  /// `none` the exponent g + hw - w whose coefficient cancels to zero.
  std::vector<Exponent> exponents;
  std::vector<Integer> coefficients;
  std::int64_t pattern_genus = 0;    // g = g(T(a,b))
  std::int64_t companion_genus = 0;  // h
  LaurentPoly product;               // Delta_{T(a,b)}(t) * companion(t^w)
};

/// For a torus-knot pattern T(a,b) with a > b >= 2 and winding 1 <= w < a,
/// forms the satellite product with an admissible companion of genus >= 1
/// and locates the coefficient violation forced by w mod b:
///   w = 0 mod b  -> none;
///   w = 1 mod b  -> coefficient -2 at t^{g+hw-w};
///   otherwise    -> same-sign pair at t^{g+hw-qb-1}, t^{g+hw-w}, q = w / b.
/// The predicted witness is checked against the actual product; a mismatch
/// throws Error(proof_mismatch). Precondition failures throw
/// Error(precondition) with a message naming the failed condition.
WindingResidueCheck check_winding_residue(std::int64_t a, std::int64_t b,
                                          std::int64_t w,
                                          const LaurentPoly& companion);

enum class ObstructionVerdict { obstructed, config_impossible, not_obstructed };

std::string_view to_string(ObstructionVerdict v) noexcept;

struct ObstructionResult {
  ObstructionVerdict verdict = ObstructionVerdict::not_obstructed;
  std::optional<WindingResidueCheck> check;
  std::string reason;
};

/// Polynomial-level obstruction for a satellite with pattern T(a,b), winding
/// w with w^2 | ab, and an admissible companion: either the configuration is
/// arithmetically impossible (w >= a, or b | w which would force b | a), or
/// check_winding_residue exhibits a violation.
ObstructionResult torus_pattern_obstruction(std::int64_t a, std::int64_t b,
                                            std::int64_t w,
                                            const LaurentPoly& companion);

}  // namespace knotpoly
