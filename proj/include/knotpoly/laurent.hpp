#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotpoly {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

/// One-variable Laurent polynomial over the integers, stored sparsely.
///
/// The term map never holds a zero coefficient, so structural equality of
/// the maps is polynomial equality and the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(TermMap terms);

  static LaurentPoly constant(Integer c);
  static LaurentPoly monomial(Integer c, Exponent e);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of t^e, zero when absent.
  Integer coefficient(Exponent e) const;

  /// Inclusive (min_exp, max_exp). Throws on the zero polynomial.
  std::pair<Exponent, Exponent> span() const;

  Exponent min_exponent() const { return span().first; }
  Exponent max_exponent() const { return span().second; }

  Integer value_at_one() const;

  /// f(t) == f(1/t), compared term by term.
  bool is_mirror_symmetric() const;

  /// t^k * f
  LaurentPoly shifted(Exponent k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

 private:
  TermMap terms_;
};

/// Replaces every exponent e by w*e. Requires w >= 1.
LaurentPoly dilate(const LaurentPoly& f, std::int64_t w);

/// Returns q with q*g == f, or throws Error(non_exact_division).
/// Leading-term elimination from the top exponent.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Normalizes f to u*t^k*f (u = +-1) so that the result is mirror-symmetric
/// with positive value at t = 1. Throws Error(not_symmetrizable) otherwise.
LaurentPoly symmetrize(const LaurentPoly& f);

/// Text form such as `t^3 - t^2 + 1 - t^-2 + t^-3`, descending exponents.
std::string to_string(const LaurentPoly& f);

/// Parses the text form produced by to_string; whitespace-insensitive and
/// also accepts `2*t^3`, `2t^3`, `t^(-2)` and repeated exponents.
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace knotpoly
