#include "knotpoly/satellite.hpp"

#include <numeric>

#include "knotpoly/error.hpp"
#include "knotpoly/torus_knot.hpp"

namespace knotpoly {
namespace {

void require_symmetrized(const LaurentPoly& f, std::string_view role) {
  if (f.is_zero() || !f.is_mirror_symmetric() || f.value_at_one() != 1) {
    throw Error(ErrorKind::precondition,
                std::string(role) + " polynomial " + to_string(f) +
                    " is not symmetrized (need f(t) = f(1/t), f(1) = 1)");
  }
}

void require_torus_pattern(std::int64_t a, std::int64_t b) {
  if (!(a > b && b >= 2) || a > 1'000'000'000 || std::gcd(a, b) != 1) {
    throw Error(ErrorKind::precondition,
                "pattern T(" + std::to_string(a) + "," + std::to_string(b) +
                    ") must satisfy a > b >= 2 with gcd(a,b) = 1");
  }
}

// Returns the companion genus h.
std::int64_t require_admissible_companion(const LaurentPoly& companion) {
  require_symmetrized(companion, "companion");
  const std::int64_t h = companion.max_exponent();
  if (h < 1) {
    throw Error(ErrorKind::precondition, "companion must have genus >= 1");
  }
  const auto report = lspace_admissible(companion);
  if (report.verdict != Admissibility::admissible) {
    throw Error(ErrorKind::precondition,
                "companion " + to_string(companion) + " is not admissible (" +
                    std::string(to_string(report.verdict)) + ")");
  }
  return h;
}

[[noreturn]] void mismatch(const std::string& what, const LaurentPoly& product) {
  throw Error(ErrorKind::proof_mismatch,
              what + " in product " + to_string(product));
}

}  // namespace

SatelliteSpec::SatelliteSpec(LaurentPoly pattern, LaurentPoly companion,
                             std::int64_t winding)
    : SatelliteSpec(pattern, pattern.is_zero() ? 0 : pattern.max_exponent(),
                    companion, companion.is_zero() ? 0 : companion.max_exponent(),
                    winding) {}

SatelliteSpec::SatelliteSpec(LaurentPoly pattern, std::int64_t pattern_genus,
                             LaurentPoly companion, std::int64_t companion_genus,
                             std::int64_t winding)
    : pattern_(std::move(pattern)),
      companion_(std::move(companion)),
      pattern_genus_(pattern_genus),
      companion_genus_(companion_genus),
      winding_(winding) {
  require_symmetrized(pattern_, "pattern");
  require_symmetrized(companion_, "companion");
  if (pattern_genus_ != pattern_.max_exponent() ||
      companion_genus_ != companion_.max_exponent()) {
    throw Error(ErrorKind::precondition,
                "genus must equal the top exponent of its polynomial");
  }
  if (winding_ < 1) {
    throw Error(ErrorKind::precondition,
                "winding number must be >= 1, got " + std::to_string(winding_));
  }
}

LaurentPoly satellite_alexander(const SatelliteSpec& s) {
  return symmetrize(s.pattern_poly() * dilate(s.companion_poly(), s.winding()));
}

std::int64_t satellite_genus(const SatelliteSpec& s) {
  return s.pattern_genus() + s.winding() * s.companion_genus();
}

std::string_view to_string(Admissibility a) noexcept {
  switch (a) {
    case Admissibility::admissible: return "admissible";
    case Admissibility::fails_magnitude: return "fails_magnitude";
    case Admissibility::fails_alternation: return "fails_alternation";
    case Admissibility::fails_top_two: return "fails_top_two";
  }
  return "unknown";
}

AdmissibilityReport lspace_admissible(const LaurentPoly& f) {
  if (f.is_zero() || !f.is_mirror_symmetric()) {
    throw Error(ErrorKind::precondition,
                "admissibility needs a nonzero symmetrized polynomial, got " +
                    to_string(f));
  }
  const Exponent g = f.max_exponent();
  const auto& terms = f.terms();

  AdmissibilityReport report;
  auto prev = terms.rend();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (abs(c) > 1) {
      report.verdict = Admissibility::fails_magnitude;
      report.witness_exponent = e;
      report.witness_coefficients = {{e, c}};
      return report;
    }
    if (prev != terms.rend() && (prev->second > 0) == (c > 0)) {
      report.verdict = Admissibility::fails_alternation;
      report.witness_exponent = e;
      report.witness_coefficients = {{prev->first, prev->second}, {e, c}};
      return report;
    }
    if (e == g && g >= 1 && !terms.contains(g - 1)) {
      report.verdict = Admissibility::fails_top_two;
      report.witness_exponent = g;
      report.witness_coefficients = {{g, c}, {g - 1, Integer(0)}};
      return report;
    }
    prev = it;
  }
  return report;
}

std::string_view to_string(CoefficientViolation v) noexcept {
  switch (v) {
    case CoefficientViolation::none: return "no_violation";
    case CoefficientViolation::magnitude: return "magnitude_violation";
    case CoefficientViolation::same_sign: return "same_sign_violation";
  }
  return "unknown";
}

WindingResidueCheck check_winding_residue(std::int64_t a, std::int64_t b,
                                          std::int64_t w,
                                          const LaurentPoly& companion) {
  require_torus_pattern(a, b);
  if (w < 1 || w >= a) {
    throw Error(ErrorKind::precondition,
                "winding must satisfy 1 <= w < a, got w = " + std::to_string(w));
  }
  const std::int64_t h = require_admissible_companion(companion);

  const TorusKnot pattern(a, b);
  WindingResidueCheck out;
  out.pattern_genus = genus(pattern);
  out.companion_genus = h;
  out.product = alexander(pattern) * dilate(companion, w);

  const Exponent top = out.pattern_genus + h * w;
  const Exponent probe = top - w;
  const auto& product = out.product;

  switch (w % b) {
    case 0: {
      if (product.coefficient(probe) != 0)
        mismatch("expected cancellation at t^" + std::to_string(probe), product);
      out.violation = CoefficientViolation::none;
      out.exponents = {probe};
      out.coefficients = {Integer(0)};
      break;
    }
    case 1: {
      if (product.coefficient(probe) != -2)
        mismatch("expected coefficient -2 at t^" + std::to_string(probe),
                 product);
      out.violation = CoefficientViolation::magnitude;
      out.exponents = {probe};
      out.coefficients = {Integer(-2)};
      break;
    }
    default: {
      const Exponent upper = top - (w / b) * b - 1;
      if (product.coefficient(upper) != -1 || product.coefficient(probe) != -1)
        mismatch("expected -1 at t^" + std::to_string(upper) + " and t^" +
                     std::to_string(probe),
                 product);
      for (Exponent e = probe + 1; e < upper; ++e) {
        if (product.coefficient(e) != 0)
          mismatch("expected zero coefficient at t^" + std::to_string(e),
                   product);
      }
      out.violation = CoefficientViolation::same_sign;
      out.exponents = {upper, probe};
      out.coefficients = {Integer(-1), Integer(-1)};
      break;
    }
  }
  return out;
}

std::string_view to_string(ObstructionVerdict v) noexcept {
  switch (v) {
    case ObstructionVerdict::obstructed: return "obstructed";
    case ObstructionVerdict::config_impossible: return "config_impossible";
    case ObstructionVerdict::not_obstructed: return "not_obstructed";
  }
  return "unknown";
}

ObstructionResult torus_pattern_obstruction(std::int64_t a, std::int64_t b,
                                            std::int64_t w,
                                            const LaurentPoly& companion) {
  require_torus_pattern(a, b);
  if (w < 1) {
    throw Error(ErrorKind::precondition,
                "winding must be >= 1, got " + std::to_string(w));
  }
  if ((a * b) % (w * w) != 0) {
    throw Error(ErrorKind::precondition,
                "w^2 = " + std::to_string(w * w) + " does not divide ab = " +
                    std::to_string(a * b));
  }
  require_admissible_companion(companion);

  ObstructionResult result;
  if (w >= a) {
    result.verdict = ObstructionVerdict::config_impossible;
    result.reason = "w >= a would give ab = k*w^2 >= a^2 > ab";
    return result;
  }
  if (w % b == 0) {
    result.verdict = ObstructionVerdict::config_impossible;
    result.reason = "b | w with w^2 | ab forces b | a, contradicting gcd(a,b) = 1";
    return result;
  }
  result.check = check_winding_residue(a, b, w, companion);
  if (result.check->violation == CoefficientViolation::none) {
    result.verdict = ObstructionVerdict::not_obstructed;
    result.reason = "no coefficient violation at the predicted exponent";
  } else {
    result.verdict = ObstructionVerdict::obstructed;
    result.reason = std::string(to_string(result.check->violation)) +
                    " in Delta_T(a,b)(t) * Delta_C(t^w)";
  }
  return result;
}

}  // namespace knotpoly
