#include "knotpoly/glue_sampler.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "knotpoly/error.hpp"

namespace knotpoly {
namespace {

struct SlopeDraw {
  std::int64_t p;
  std::int64_t q;
};

template <typename Accept>
SlopeDraw draw_slope(std::mt19937_64& rng, Accept accept) {
  std::uniform_int_distribution<std::int64_t> num(-6, 6);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  while (true) {
    const SlopeDraw s{num(rng), den(rng)};
    if (std::gcd(s.p, s.q) == 1 && accept(s)) return s;
  }
}

Complex random_offset(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.2, 2.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return std::polar(radius(rng), angle(rng));
}

GlueInstance sample_diagonal(std::mt19937_64& rng) {
  const SlopeDraw slope = draw_slope(rng, [](const SlopeDraw&) { return true; });
  const std::int64_t w = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);

  std::uniform_real_distribution<double> log_radius(std::log(0.5), std::log(2.0));
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Complex log_alpha;
  Complex alpha;
  do {
    log_alpha = Complex(log_radius(rng), angle(rng));
    alpha = std::exp(log_alpha);
  } while (std::abs(alpha - 1.0) < 1e-3 || std::abs(alpha + 1.0) < 1e-3);

  // beta = exp((-p log alpha + 2 pi i j) / q) solves alpha^p beta^q = 1.
  const std::int64_t j =
      std::uniform_int_distribution<std::int64_t>(0, slope.q - 1)(rng);
  const Complex log_beta =
      (-static_cast<double>(slope.p) * log_alpha +
       Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(j))) /
      static_cast<double>(slope.q);
  const Complex beta = std::exp(log_beta);

  return GlueInstance(slope.p, slope.q, w,
                      PeripheralPair(Mat2C::diagonal(alpha, 1.0 / alpha),
                                     Mat2C::diagonal(beta, 1.0 / beta)));
}

GlueInstance sample_jordan(std::mt19937_64& rng, bool twisted) {
  std::bernoulli_distribution coin(0.5);
  const int eps = twisted ? -1 : (coin(rng) ? 1 : -1);
  std::int64_t w;
  if (twisted) {
    w = 2 * std::uniform_int_distribution<std::int64_t>(1, 2)(rng);
  } else if (eps == -1) {
    w = 2 * std::uniform_int_distribution<std::int64_t>(0, 2)(rng) + 1;
  } else {
    w = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
  }

  // eps^p eta^q = 1: q odd fixes eta = eps^p; q even needs eps^p = 1.
  const SlopeDraw slope = draw_slope(rng, [eps](const SlopeDraw& s) {
    return s.q % 2 == 1 || eps == 1 || s.p % 2 == 0;
  });
  const int eps_p = (eps == -1 && slope.p % 2 != 0) ? -1 : 1;
  int eta = eps_p;
  if (slope.q % 2 == 0) eta = coin(rng) ? 1 : -1;

  const Complex a = random_offset(rng);
  const Complex b = -a * static_cast<double>(slope.p) / static_cast<double>(slope.q);
  return GlueInstance(
      slope.p, slope.q, w,
      PeripheralPair(Mat2C::jordan(static_cast<double>(eps), a),
                     Mat2C::jordan(static_cast<double>(eta), b)));
}

}  // namespace

GlueInstance sample_glue_instance(int case_id, std::uint64_t seed,
                                  std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_id),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  switch (case_id) {
    case 1: return sample_diagonal(rng);
    case 2: return sample_jordan(rng, false);
    case 3: return sample_jordan(rng, true);
    default:
      throw Error(ErrorKind::invalid_argument,
                  "glue case must be 1, 2 or 3, got " + std::to_string(case_id));
  }
}

}  // namespace knotpoly
