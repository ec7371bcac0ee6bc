#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/rational.hpp>

namespace knotpoly {

/// Exact rational, always reduced with a positive denominator.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// A rational slope or the vertical (infinite) slope.
class Slope {
 public:
  static Slope finite(Rational value) { return Slope(false, value); }
  static Slope vertical() { return Slope(true, Rational(0)); }

  /// dy/dx for a lattice direction; dx == 0 gives the vertical slope.
  static Slope of_direction(std::int64_t dx, std::int64_t dy);

  bool is_vertical() const noexcept { return vertical_; }
  /// Only meaningful when !is_vertical().
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Finite slopes ordered by value, vertical last.
  friend bool operator<(const Slope& x, const Slope& y);

 private:
  Slope(bool vertical, Rational value) : vertical_(vertical), value_(value) {}

  bool vertical_;
  Rational value_;
};

/// "6", "13/2", "-6" or "inf".
std::string to_string(const Slope& s);
std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace knotpoly
