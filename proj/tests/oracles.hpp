#pragma once

// Test-only reference computations. Nothing here calls into the library's
// arithmetic; everything works on dense int64 coefficient vectors.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

/// Dense polynomial in t, index = exponent.
using Dense = std::vector<std::int64_t>;

inline Dense trim(Dense f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Dense multiply(const Dense& f, const Dense& g) {
  if (f.empty() || g.empty()) return {};
  Dense r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  return trim(r);
}

/// Schoolbook long division; throws when the remainder is nonzero.
inline Dense long_divide(Dense num, const Dense& den) {
  num = trim(num);
  const Dense d = trim(den);
  if (num.size() < d.size()) {
    if (num.empty()) return {};
    throw std::runtime_error("non-exact");
  }
  Dense quot(num.size() - d.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const std::int64_t lead = num[i + d.size() - 1];
    if (lead % d.back() != 0) throw std::runtime_error("non-exact");
    const std::int64_t c = lead / d.back();
    quot[i] = c;
    for (std::size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
  }
  for (auto c : num)
    if (c != 0) throw std::runtime_error("non-exact");
  return trim(quot);
}

/// t^e - 1
inline Dense binomial(std::size_t e) {
  Dense f(e + 1, 0);
  f[e] = 1;
  f[0] -= 1;
  return f;
}

/// Unsymmetrized torus knot polynomial by long division.
inline Dense torus_by_division(std::int64_t p, std::int64_t q) {
  const auto n = static_cast<std::size_t>(p * q);
  return long_divide(multiply(binomial(n), binomial(1)),
                     multiply(binomial(static_cast<std::size_t>(p)),
                              binomial(static_cast<std::size_t>(q))));
}

/// Same polynomial from the numerical semigroup <p, q>:
/// coefficient of t^s is [s in S] - [s - 1 in S] for 0 <= s <= 2g.
inline Dense torus_by_semigroup(std::int64_t p, std::int64_t q) {
  const std::int64_t two_g = (p - 1) * (q - 1);
  std::vector<bool> in(static_cast<std::size_t>(two_g + 1), false);
  for (std::int64_t i = 0; i * p <= two_g; ++i)
    for (std::int64_t j = 0; i * p + j * q <= two_g; ++j)
      in[static_cast<std::size_t>(i * p + j * q)] = true;
  Dense f(static_cast<std::size_t>(two_g + 1), 0);
  for (std::int64_t s = 0; s <= two_g; ++s) {
    f[static_cast<std::size_t>(s)] =
        (in[static_cast<std::size_t>(s)] ? 1 : 0) -
        (s > 0 && in[static_cast<std::size_t>(s - 1)] ? 1 : 0);
  }
  return f;
}

/// Centred exponent -> coefficient map of a dense polynomial of even degree.
inline std::map<std::int64_t, std::int64_t> centred(const Dense& f) {
  std::map<std::int64_t, std::int64_t> m;
  const auto shift = static_cast<std::int64_t>(f.size() - 1) / 2;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) m[static_cast<std::int64_t>(i) - shift] = f[i];
  return m;
}

/// Sparse Laurent convolution on maps.
inline std::map<std::int64_t, std::int64_t> convolve(
    const std::map<std::int64_t, std::int64_t>& f,
    const std::map<std::int64_t, std::int64_t>& g) {
  std::map<std::int64_t, std::int64_t> r;
  for (auto [ef, cf] : f)
    for (auto [eg, cg] : g) r[ef + eg] += cf * cg;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

/// Smallest k in [0, d) with m + p k = 0 mod d, by scanning.
inline std::int64_t scan_k(std::int64_t m, std::int64_t p, std::int64_t d) {
  for (std::int64_t k = 0; k < d; ++k)
    if (((m + p * k) % d + d) % d == 0) return k;
  throw std::runtime_error("no k");
}

/// count[n] = #{(p, q): 2 <= p < q, pq = n, gcd = 1} for all n <= limit.
inline std::vector<int> coprime_pair_counts(std::int64_t limit) {
  std::vector<int> count(static_cast<std::size_t>(limit + 1), 0);
  for (std::int64_t p = 2; p * (p + 1) <= limit; ++p)
    for (std::int64_t q = p + 1; p * q <= limit; ++q)
      if (std::gcd(p, q) == 1) ++count[static_cast<std::size_t>(p * q)];
  return count;
}

/// Number of distinct prime factors, by trial division.
inline int omega(std::int64_t n) {
  int k = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++k;
      while (n % p == 0) n /= p;
    }
  }
  return k + (n > 1 ? 1 : 0);
}

/// First coefficient condition broken, scanning exponents from the top:
/// kind 0 none, 1 |c| > 1, 2 consecutive nonzero with equal signs, 3 zero
/// coefficient just below a positive top exponent. `exponents` holds the
/// offending exponent, or the (upper, lower) pair for kind 2.
struct Scan {
  int kind = 0;
  std::vector<std::int64_t> exponents;
};

inline Scan scan(const std::map<std::int64_t, std::int64_t>& f) {
  const std::int64_t hi = f.rbegin()->first;
  const std::int64_t lo = f.begin()->first;
  std::int64_t prev_e = 0;
  std::int64_t prev_c = 0;
  for (std::int64_t e = hi; e >= lo; --e) {
    const auto it = f.find(e);
    const std::int64_t c = it == f.end() ? 0 : it->second;
    if (c > 1 || c < -1) return {1, {e}};
    if (c != 0 && prev_c != 0 && (c > 0) == (prev_c > 0)) return {2, {prev_e, e}};
    if (hi >= 1 && e == hi - 1 && c == 0) return {3, {e}};
    if (c != 0) {
      prev_e = e;
      prev_c = c;
    }
  }
  return {};
}

/// Dilation t -> t^w of a sparse polynomial.
inline std::map<std::int64_t, std::int64_t> dilate(const std::map<std::int64_t, std::int64_t>& f,
                                                   std::int64_t w) {
  std::map<std::int64_t, std::int64_t> r;
  for (auto [e, c] : f) r[e * w] = c;
  return r;
}

}  // namespace oracle
