#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/bipoly.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/slope.hpp"

namespace knotpoly {

/// A nontrivial torus knot T(a,b), stored canonically as |a| > b >= 2 with
/// the knot's handedness carried by the sign of a.
///
/// T(a,b) and T(b,a) are the same knot, and T(a,-b) is T(-a,b); the
/// constructor folds all of these onto one canonical pair. The unknot
/// (a parameter of absolute value <= 1) and non-coprime pairs are rejected.
class TorusKnot {
 public:
  TorusKnot(std::int64_t a, std::int64_t b);

  /// Parses `T(a,b)` (whitespace allowed).
  static TorusKnot parse(std::string_view text);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  /// |a|, the larger parameter.
  std::int64_t p() const noexcept { return a_ < 0 ? -a_ : a_; }
  bool is_positive() const noexcept { return a_ > 0; }
  /// Whether the constructor arguments already satisfied |a| > b >= 2.
  bool input_canonical() const noexcept { return input_canonical_; }

  TorusKnot mirror() const { return TorusKnot(-a_, b_); }

  friend bool operator==(const TorusKnot& x, const TorusKnot& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  std::int64_t a_;
  std::int64_t b_;
  bool input_canonical_;
};

std::string to_string(const TorusKnot& k);

/// Symmetrized Alexander polynomial, computed as the exact quotient
/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) and then centred.
LaurentPoly alexander(const TorusKnot& k);

/// sum_{i=0}^{floor(p/q)} (t^{g-iq} - t^{g-iq-1}) with p = |a|, q = b.
/// Agrees with alexander(k) on every exponent above g - p.
LaurentPoly leading_form(const TorusKnot& k);

/// (|a| - 1)(b - 1) / 2
std::int64_t genus(const TorusKnot& k);

/// Enhanced A-polynomial, one of four closed forms depending on b == 2 and
/// the sign of a. Returned sign-normalized.
BiPoly enhanced_apoly(const TorusKnot& k);

struct SlopeFamily {
  std::vector<Rational> slopes;  // (n*ab + 1)/n for n = 1..n_max
  Rational limit;                // ab
};

/// Lens-space surgery slopes accumulating at ab. Requires n_max >= 1.
SlopeFamily abelian_slope_family(const TorusKnot& k, std::int64_t n_max);

}  // namespace knotpoly
