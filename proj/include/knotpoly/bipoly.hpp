#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Exponent pair of the monomial M^m_exp * L^l_exp, ordered (l_exp, m_exp).
struct BiExponent {
  Exponent l_exp = 0;
  Exponent m_exp = 0;

  friend auto operator<=>(const BiExponent&, const BiExponent&) = default;
};

/// Two-variable integer polynomial in M and L, defined up to sign.
///
/// Stored sparse, with no zero coefficients, and sign-normalized so that the
/// lexicographically smallest (l_exp, m_exp) monomial has a positive
/// coefficient. Negative exponents are allowed.
class BiPoly {
 public:
  using TermMap = std::map<BiExponent, Integer>;

  BiPoly() = default;
  explicit BiPoly(TermMap terms);

  static BiPoly constant(Integer c);
  static BiPoly monomial(Integer c, Exponent m_exp, Exponent l_exp);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  Integer coefficient(Exponent m_exp, Exponent l_exp) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;
  friend BiPoly operator*(const BiPoly& f, const BiPoly& g);

 private:
  TermMap terms_;
};

/// `c*M^i*L^j` monomials in ascending (L, M) order, e.g. `1 - M^24*L^2`.
std::string to_string(const BiPoly& f);

/// Accepts the output of to_string plus any sign, order or `*` spacing.
BiPoly parse_bipoly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const BiPoly& f);

}  // namespace knotpoly
