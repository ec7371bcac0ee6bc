#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace knotpoly {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major.
class Mat2C {
 public:
  Mat2C() = default;
  Mat2C(Complex a00, Complex a01, Complex a10, Complex a11)
      : e_{a00, a01, a10, a11} {}

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C diagonal(Complex x, Complex y) { return {x, 0.0, 0.0, y}; }
  /// scale * [[1, off], [0, 1]]
  static Mat2C jordan(Complex scale, Complex off) {
    return {scale, scale * off, 0.0, scale};
  }

  Complex operator()(int row, int col) const { return e_[2 * row + col]; }
  Complex& operator()(int row, int col) { return e_[2 * row + col]; }

  Complex det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  /// Inverse via the adjugate; requires det != 0.
  Mat2C inverse() const;
  /// Exponentiation by squaring; negative n uses the inverse.
  Mat2C pow(std::int64_t n) const;

  friend Mat2C operator*(const Mat2C& x, const Mat2C& y);
  friend Mat2C operator*(Complex s, const Mat2C& x);
  friend Mat2C operator+(const Mat2C& x, const Mat2C& y);
  friend Mat2C operator-(const Mat2C& x, const Mat2C& y);
  friend Mat2C operator-(const Mat2C& x) { return Complex(-1.0) * x; }

 private:
  std::array<Complex, 4> e_{};
};

/// max_{ij} |x_ij - y_ij|
double max_norm_distance(const Mat2C& x, const Mat2C& y);

/// Tolerance for the structural checks on representation values.
inline constexpr double kRepTolerance = 1e-9;

/// Images of the companion's meridian and longitude, mu in Jordan normal
/// form. Construction checks det = 1 for both, mu != +-I and that the two
/// matrices commute, all within kRepTolerance.
class PeripheralPair {
 public:
  PeripheralPair(Mat2C mu, Mat2C lambda);

  const Mat2C& mu() const noexcept { return mu_; }
  const Mat2C& lambda() const noexcept { return lambda_; }

 private:
  Mat2C mu_;
  Mat2C lambda_;
};

struct DiagonalCase {
  Complex alpha;  // mu = diag(alpha, 1/alpha), alpha != +-1
  Complex beta;   // lambda = diag(beta, 1/beta)
};

/// mu = eps*[[1,a],[0,1]], lambda = eta*[[1,b],[0,1]], and eps^w == eps.
struct JordanPlusCase {
  int eps;
  Complex a_off;
  int eta;
  Complex b_off;
};

/// mu = -[[1,a],[0,1]] with w even: no w-th root, needs the central twist.
struct JordanMinusCase {
  Complex a_off;
  int eta;
  Complex b_off;
};

using CaseTag = std::variant<DiagonalCase, JordanPlusCase, JordanMinusCase>;

/// 1, 2 or 3 for the diagonal, Jordan-with-root and twisted Jordan cases.
int case_number(const CaseTag& tag) noexcept;
std::string_view case_name(const CaseTag& tag) noexcept;

/// Reads the case data off a Jordan-normal-form peripheral pair.
/// Throws Error(invalid_argument) for w < 1 or if mu (or lambda) is not in
/// the matching normal form.
CaseTag classify_case(const PeripheralPair& pp, std::int64_t w);

/// Smallest k >= 0 with m + p*k = 0 (mod d). Requires d >= 1 and
/// gcd(p, d) == 1, else throws Error(precondition).
std::int64_t choose_k(std::int64_t m, std::int64_t p, std::int64_t d);

/// A surgery slope p/q on the companion together with the winding number of
/// the pattern and the companion's peripheral representation data.
class GlueInstance {
 public:
  /// Validates gcd(p, q) == 1, q > 0, w >= 1 and mu^p * lambda^q = I within
  /// kRepTolerance (Error(relation_violated) otherwise).
  GlueInstance(std::int64_t p, std::int64_t q, std::int64_t w,
               PeripheralPair peripheral);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t w() const noexcept { return w_; }
  /// gcd(q, w^2)
  std::int64_t d() const noexcept { return d_; }
  const PeripheralPair& peripheral() const noexcept { return peripheral_; }

  /// Numerator p*w^2/d and denominator q/d of the slope r*w^2 in lowest terms.
  std::int64_t surgered_numerator() const noexcept { return p_ * (w_ * w_ / d_); }
  std::int64_t surgered_denominator() const noexcept { return q_ / d_; }

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t w_;
  std::int64_t d_;
  PeripheralPair peripheral_;
};

/// Polar data of the diagonal case: alpha = s e^{i theta},
/// beta = t e^{i phi}, p*theta + q*phi = 2 pi m, and the chosen k.
struct PolarData {
  double s = 0;
  double t = 0;
  double theta = 0;
  double phi = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
};

struct Extension {
  int case_id = 0;
  Mat2C mu_P;
  Mat2C lambda_P;
  bool central_twist_used = false;
  std::optional<std::int64_t> chosen_k;
  std::optional<PolarData> polar;
  std::array<double, 3> residuals{};
};

/// Builds the abelian extension over the pattern exterior: mu_P^w equals the
/// (possibly twisted) meridian image, lambda_P = lambda^w and
/// mu_P^{pw^2/d} lambda_P^{q/d} = I. Angles are principal arguments; m is
/// rounded from (p theta + q phi) / 2pi and a rounding residual above 1e-6
/// throws Error(relation_violated).
Extension construct_extension(const GlueInstance& g);

struct VerifyResult {
  bool ok = false;
  std::array<double, 3> residuals{};
  /// 1-based equation numbers whose residual is not below the tolerance.
  std::vector<int> failed_equations;
};

/// Recomputes the three extension equations from the instance and the two
/// output matrices alone.
VerifyResult verify_extension(const GlueInstance& g, const Extension& e,
                              double tol);

}  // namespace knotpoly
