#include "knotpoly/slope.hpp"

#include <ostream>

namespace knotpoly {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Slope Slope::of_direction(std::int64_t dx, std::int64_t dy) {
  if (dx == 0) return vertical();
  return finite(Rational(dy, dx));
}

bool operator<(const Slope& x, const Slope& y) {
  if (x.vertical_ || y.vertical_) return !x.vertical_ && y.vertical_;
  return x.value_ < y.value_;
}

std::string to_string(const Slope& s) {
  return s.is_vertical() ? "inf" : to_string(s.value());
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << to_string(s);
}

}  // namespace knotpoly
