#include "knotpoly/repglue.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "knotpoly/error.hpp"

namespace knotpoly {
namespace {

bool near(Complex x, Complex y, double tol = kRepTolerance) {
  return std::abs(x - y) < tol;
}

// Returns +1 or -1 if x is within tolerance of it, otherwise 0.
int unit_sign(Complex x) {
  if (near(x, 1.0)) return 1;
  if (near(x, -1.0)) return -1;
  return 0;
}

__extension__ typedef __int128 Wide;

std::int64_t floor_mod(std::int64_t x, std::int64_t d) {
  const std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

Mat2C Mat2C::inverse() const {
  const Complex dt = det();
  if (dt == Complex(0.0)) {
    throw Error(ErrorKind::invalid_argument, "singular matrix has no inverse");
  }
  return {e_[3] / dt, -e_[1] / dt, -e_[2] / dt, e_[0] / dt};
}

Mat2C Mat2C::pow(std::int64_t n) const {
  Mat2C base = n < 0 ? inverse() : *this;
  std::uint64_t exp = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                            : static_cast<std::uint64_t>(n);
  Mat2C acc = identity();
  while (exp != 0) {
    if (exp & 1) acc = acc * base;
    exp >>= 1;
    if (exp != 0) base = base * base;
  }
  return acc;
}

Mat2C operator*(const Mat2C& x, const Mat2C& y) {
  return {x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0),
          x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
          x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0),
          x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)};
}

Mat2C operator*(Complex s, const Mat2C& x) {
  return {s * x(0, 0), s * x(0, 1), s * x(1, 0), s * x(1, 1)};
}

Mat2C operator+(const Mat2C& x, const Mat2C& y) {
  return {x(0, 0) + y(0, 0), x(0, 1) + y(0, 1), x(1, 0) + y(1, 0),
          x(1, 1) + y(1, 1)};
}

Mat2C operator-(const Mat2C& x, const Mat2C& y) { return x + (-y); }

double max_norm_distance(const Mat2C& x, const Mat2C& y) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(x(r, c) - y(r, c)));
  }
  return worst;
}

PeripheralPair::PeripheralPair(Mat2C mu, Mat2C lambda)
    : mu_(mu), lambda_(lambda) {
  if (!near(mu_.det(), 1.0) || !near(lambda_.det(), 1.0)) {
    throw Error(ErrorKind::invalid_argument,
                "peripheral values must lie in SL(2,C)");
  }
  const Mat2C id = Mat2C::identity();
  if (max_norm_distance(mu_, id) < kRepTolerance ||
      max_norm_distance(mu_, -id) < kRepTolerance) {
    throw Error(ErrorKind::invalid_argument,
                "meridian image must not be central (+-I)");
  }
  if (max_norm_distance(mu_ * lambda_, lambda_ * mu_) >= kRepTolerance) {
    throw Error(ErrorKind::invalid_argument,
                "meridian and longitude images must commute");
  }
}

int case_number(const CaseTag& tag) noexcept {
  return static_cast<int>(tag.index()) + 1;
}

std::string_view case_name(const CaseTag& tag) noexcept {
  switch (tag.index()) {
    case 0: return "diagonal";
    case 1: return "jordan_plus";
    default: return "jordan_minus";
  }
}

CaseTag classify_case(const PeripheralPair& pp, std::int64_t w) {
  if (w < 1) {
    throw Error(ErrorKind::invalid_argument, "winding number must be >= 1");
  }
  const Mat2C& mu = pp.mu();
  const Mat2C& lambda = pp.lambda();
  auto not_normal = [](const char* what) {
    return Error(ErrorKind::invalid_argument,
                 std::string(what) + " is not in Jordan normal form");
  };
  if (!near(mu(1, 0), 0.0)) throw not_normal("meridian image");

  if (near(mu(0, 1), 0.0)) {
    if (!near(lambda(0, 1), 0.0) || !near(lambda(1, 0), 0.0))
      throw not_normal("longitude image for a diagonal meridian");
    return DiagonalCase{mu(0, 0), lambda(0, 0)};
  }

  const int eps = unit_sign(mu(0, 0));
  if (eps == 0 || !near(mu(1, 1), mu(0, 0))) throw not_normal("meridian image");
  const int eta = unit_sign(lambda(0, 0));
  if (eta == 0 || !near(lambda(1, 1), lambda(0, 0)) || !near(lambda(1, 0), 0.0))
    throw not_normal("longitude image for a parabolic meridian");

  const Complex a_off = mu(0, 1) / static_cast<double>(eps);
  const Complex b_off = lambda(0, 1) / static_cast<double>(eta);
  if (eps == -1 && w % 2 == 0) return JordanMinusCase{a_off, eta, b_off};
  return JordanPlusCase{eps, a_off, eta, b_off};
}

std::int64_t choose_k(std::int64_t m, std::int64_t p, std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::precondition, "modulus d must be >= 1");
  if (std::gcd(p, d) != 1) {
    throw Error(ErrorKind::precondition,
                "p = " + std::to_string(p) + " is not invertible mod d = " +
                    std::to_string(d));
  }
  if (d == 1) return 0;
  // Extended Euclid for the inverse of p mod d.
  std::int64_t r0 = floor_mod(p, d), r1 = d, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    r0 = std::exchange(r1, r0 - quot * r1);
    s0 = std::exchange(s1, s0 - quot * s1);
  }
  const std::int64_t p_inv = floor_mod(s0, d);
  const std::int64_t neg_m = floor_mod(-floor_mod(m, d), d);
  return static_cast<std::int64_t>(
      (static_cast<Wide>(neg_m) * p_inv) % d);
}

GlueInstance::GlueInstance(std::int64_t p, std::int64_t q, std::int64_t w,
                           PeripheralPair peripheral)
    : p_(p), q_(q), w_(w), d_(0), peripheral_(std::move(peripheral)) {
  if (q_ <= 0 || std::gcd(p_, q_) != 1) {
    throw Error(ErrorKind::invalid_argument,
                "slope p/q needs q > 0 and gcd(p, q) = 1");
  }
  if (w_ < 1) throw Error(ErrorKind::invalid_argument, "winding must be >= 1");
  d_ = std::gcd(q_, w_ * w_);
  const Mat2C relation =
      peripheral_.mu().pow(p_) * peripheral_.lambda().pow(q_);
  const double residual = max_norm_distance(relation, Mat2C::identity());
  if (residual >= kRepTolerance) {
    throw Error(ErrorKind::relation_violated,
                "mu^p lambda^q differs from I by " + std::to_string(residual));
  }
}

namespace {

std::array<double, 3> residuals_of(const GlueInstance& g, const Mat2C& mu_target,
                                   const Mat2C& mu_P, const Mat2C& lambda_P) {
  const std::int64_t w = g.w();
  const Mat2C lambda_w = g.peripheral().lambda().pow(w);
  const Mat2C closed =
      mu_P.pow(g.surgered_numerator()) * lambda_P.pow(g.surgered_denominator());
  return {max_norm_distance(mu_P.pow(w), mu_target),
          max_norm_distance(lambda_P, lambda_w),
          max_norm_distance(closed, Mat2C::identity())};
}

}  // namespace

Extension construct_extension(const GlueInstance& g) {
  const std::int64_t w = g.w();
  const double wd = static_cast<double>(w);
  const CaseTag tag = classify_case(g.peripheral(), w);

  Extension ext;
  ext.case_id = case_number(tag);
  Mat2C mu_target = g.peripheral().mu();

  if (const auto* diag = std::get_if<DiagonalCase>(&tag)) {
    PolarData polar;
    polar.s = std::abs(diag->alpha);
    polar.theta = std::arg(diag->alpha);
    polar.t = std::abs(diag->beta);
    polar.phi = std::arg(diag->beta);
    const double turns =
        (static_cast<double>(g.p()) * polar.theta +
         static_cast<double>(g.q()) * polar.phi) / (2.0 * std::numbers::pi);
    polar.m = std::llround(turns);
    if (std::abs(turns - static_cast<double>(polar.m)) > 1e-6) {
      throw Error(ErrorKind::relation_violated,
                  "p*theta + q*phi is not a multiple of 2pi");
    }
    polar.k = choose_k(polar.m, g.p(), g.d());
    const Complex eta =
        std::pow(polar.s, 1.0 / wd) *
        std::exp(Complex(0.0, (polar.theta + 2.0 * std::numbers::pi *
                                                 static_cast<double>(polar.k)) /
                                  wd));
    ext.mu_P = Mat2C::diagonal(eta, 1.0 / eta);
    ext.lambda_P = g.peripheral().lambda().pow(w);
    ext.chosen_k = polar.k;
    ext.polar = polar;
  } else if (const auto* plus = std::get_if<JordanPlusCase>(&tag)) {
    const double eta_w = (w % 2 == 0) ? 1.0 : static_cast<double>(plus->eta);
    ext.mu_P = Mat2C::jordan(static_cast<double>(plus->eps), plus->a_off / wd);
    ext.lambda_P = Mat2C::jordan(eta_w, plus->b_off * wd);
  } else {
    const auto& minus = std::get<JordanMinusCase>(tag);
    ext.central_twist_used = true;
    mu_target = -mu_target;
    ext.mu_P = Mat2C::jordan(1.0, minus.a_off / wd);
    ext.lambda_P = Mat2C::jordan(1.0, minus.b_off * wd);
  }
  ext.residuals = residuals_of(g, mu_target, ext.mu_P, ext.lambda_P);
  return ext;
}

VerifyResult verify_extension(const GlueInstance& g, const Extension& e,
                              double tol) {
  const CaseTag tag = classify_case(g.peripheral(), g.w());
  const Mat2C mu_target = std::holds_alternative<JordanMinusCase>(tag)
                              ? -g.peripheral().mu()
                              : g.peripheral().mu();
  VerifyResult out;
  out.residuals = residuals_of(g, mu_target, e.mu_P, e.lambda_P);
  for (int i = 0; i < 3; ++i) {
    // NaN residuals fail too.
    if (!(out.residuals[i] < tol)) out.failed_equations.push_back(i + 1);
  }
  out.ok = out.failed_equations.empty();
  return out;
}

}  // namespace knotpoly
