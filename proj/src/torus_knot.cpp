#include "knotpoly/torus_knot.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "knotpoly/error.hpp"

namespace knotpoly {
namespace {

// Keeps 2ab and pq-sized exponents well inside int64.
constexpr std::int64_t kMaxParameter = 1'000'000'000;

std::int64_t magnitude(std::int64_t x) { return x < 0 ? -x : x; }

LaurentPoly binomial(Exponent e) {  // t^e - 1
  return LaurentPoly::monomial(1, e) - LaurentPoly::constant(1);
}

}  // namespace

TorusKnot::TorusKnot(std::int64_t a, std::int64_t b) {
  const std::int64_t ma = magnitude(a);
  const std::int64_t mb = magnitude(b);
  if (ma > kMaxParameter || mb > kMaxParameter) {
    throw Error(ErrorKind::invalid_argument, "torus knot parameter too large");
  }
  if (ma < 2 || mb < 2) {
    throw Error(ErrorKind::invalid_argument,
                "T(" + std::to_string(a) + "," + std::to_string(b) +
                    ") is the unknot; both parameters need |.| >= 2");
  }
  if (std::gcd(ma, mb) != 1) {
    throw Error(ErrorKind::invalid_argument,
                "T(" + std::to_string(a) + "," + std::to_string(b) +
                    ") has non-coprime parameters");
  }
  const bool positive = (a > 0) == (b > 0);
  input_canonical_ = ma > b && b >= 2;
  a_ = positive ? std::max(ma, mb) : -std::max(ma, mb);
  b_ = std::min(ma, mb);
}

TorusKnot TorusKnot::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  auto bad = [&]() {
    return Error(ErrorKind::parse_error,
                 "expected T(a,b), got '" + std::string(text) + "'");
  };
  if (compact.size() < 6 || (compact[0] != 'T' && compact[0] != 't') ||
      compact[1] != '(' || compact.back() != ')') {
    throw bad();
  }
  const auto comma = compact.find(',');
  if (comma == std::string::npos) throw bad();
  auto read = [&](std::size_t from, std::size_t to) {
    std::int64_t v = 0;
    const char* first = compact.data() + from;
    const char* last = compact.data() + to;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw bad();
    return v;
  };
  const std::int64_t a = read(2, comma);
  const std::int64_t b = read(comma + 1, compact.size() - 1);
  return TorusKnot(a, b);
}

std::string to_string(const TorusKnot& k) {
  return "T(" + std::to_string(k.a()) + "," + std::to_string(k.b()) + ")";
}

LaurentPoly alexander(const TorusKnot& k) {
  const std::int64_t p = k.p();
  const std::int64_t q = k.b();
  const LaurentPoly numerator = binomial(p * q) * binomial(1);
  const LaurentPoly denominator = binomial(p) * binomial(q);
  return symmetrize(exact_divide(numerator, denominator));
}

LaurentPoly leading_form(const TorusKnot& k) {
  const std::int64_t p = k.p();
  const std::int64_t q = k.b();
  const std::int64_t g = genus(k);
  LaurentPoly sum;
  for (std::int64_t i = 0; i <= p / q; ++i) {
    sum = sum + LaurentPoly::monomial(1, g - i * q) -
          LaurentPoly::monomial(1, g - i * q - 1);
  }
  return sum;
}

std::int64_t genus(const TorusKnot& k) { return (k.p() - 1) * (k.b() - 1) / 2; }

BiPoly enhanced_apoly(const TorusKnot& k) {
  const std::int64_t a = k.a();
  const std::int64_t b = k.b();
  BiPoly::TermMap t;
  if (b == 2) {
    if (a > 0) {  // 1 + M^{2a} L
      t[{0, 0}] = 1;
      t[{1, 2 * a}] = 1;
    } else {  // M^{-2a} + L
      t[{0, -2 * a}] = 1;
      t[{1, 0}] = 1;
    }
  } else {
    if (a > 0) {  // -1 + M^{2ab} L^2
      t[{0, 0}] = -1;
      t[{2, 2 * a * b}] = 1;
    } else {  // -M^{-2ab} + L^2
      t[{0, -2 * a * b}] = -1;
      t[{2, 0}] = 1;
    }
  }
  return BiPoly(std::move(t));
}

SlopeFamily abelian_slope_family(const TorusKnot& k, std::int64_t n_max) {
  if (n_max < 1) {
    throw Error(ErrorKind::invalid_argument,
                "slope family needs n_max >= 1, got " + std::to_string(n_max));
  }
  const std::int64_t ab = k.a() * k.b();
  SlopeFamily family{{}, Rational(ab)};
  family.slopes.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    family.slopes.emplace_back(n * ab + 1, n);
  }
  return family;
}

}  // namespace knotpoly
