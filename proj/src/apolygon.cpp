#include "knotpoly/apolygon.hpp"

#include <algorithm>
#include <numeric>

#include "knotpoly/error.hpp"

namespace knotpoly {
namespace {

__extension__ typedef __int128 Wide;

// Twice the signed area of (o, x, y); positive for a left turn.
Wide cross(const LatticePoint& o, const LatticePoint& x, const LatticePoint& y) {
  return static_cast<Wide>(x.a - o.a) * (y.b - o.b) -
         static_cast<Wide>(x.b - o.b) * (y.a - o.a);
}

// Andrew's monotone chain on sorted unique points; strict turns only.
std::vector<LatticePoint> convex_hull(const std::vector<LatticePoint>& pts) {
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;
}

// Prime-power factors p_i^{e_i} of n, ascending by prime.
std::vector<std::int64_t> prime_power_parts(std::int64_t n) {
  std::vector<std::int64_t> parts;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::int64_t power = 1;
    while (n % p == 0) {
      n /= p;
      power *= p;
    }
    parts.push_back(power);
  }
  if (n > 1) parts.push_back(n);
  return parts;
}

std::optional<std::int64_t> to_small(const Integer& c) {
  if (c > 1 || c < -1) return std::nullopt;
  return static_cast<std::int64_t>(c);
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& f) {
  if (f.is_zero()) {
    throw Error(ErrorKind::invalid_argument,
                "Newton polygon of the zero polynomial");
  }
  NewtonPolygon poly;
  poly.lattice_points.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) {
    poly.lattice_points.push_back({e.l_exp, e.m_exp});
  }
  std::sort(poly.lattice_points.begin(), poly.lattice_points.end());
  poly.hull_vertices = convex_hull(poly.lattice_points);

  const auto& v = poly.hull_vertices;
  const std::size_t edges = v.size() < 2 ? 0 : (v.size() == 2 ? 1 : v.size());
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& from = v[i];
    const auto& to = v[(i + 1) % v.size()];
    poly.edge_slopes.push_back(Slope::of_direction(to.a - from.a, to.b - from.b));
  }
  return poly;
}

Thinness thinness(const BiPoly& f) {
  const NewtonPolygon poly = newton_polygon(f);
  Thinness result;
  if (poly.hull_vertices.size() == 1) {
    result.kind = Thinness::Kind::point;
  } else if (poly.hull_vertices.size() == 2) {
    const Slope s = poly.edge_slopes.front();
    if (s.is_vertical()) {
      result.kind = Thinness::Kind::not_thin;
      result.vertical = true;
    } else {
      result.kind = Thinness::Kind::thin;
      result.slope = s.value();
    }
  } else {
    result.kind = Thinness::Kind::not_thin;
  }
  return result;
}

std::vector<Slope> edge_boundary_slopes(const BiPoly& f) {
  std::vector<Slope> slopes = newton_polygon(f).edge_slopes;
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  return slopes;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_factorizations(
    std::int64_t n) {
  if (n < 4) {
    throw Error(ErrorKind::invalid_argument,
                "coprime factorizations need n >= 4, got " + std::to_string(n));
  }
  const auto parts = prime_power_parts(n);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::uint64_t subsets = std::uint64_t{1} << parts.size();
  for (std::uint64_t mask = 1; mask + 1 < subsets; ++mask) {
    std::int64_t p = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) p *= parts[i];
    }
    if (p < n / p) out.emplace_back(p, n / p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DetectionResult detect_torus_from_apoly(const BiPoly& f) {
  DetectionResult result;
  if (f.is_one()) {
    result.is_unknot = true;
    result.unique = true;
    return result;
  }
  if (f.terms().size() != 2) return result;

  const auto& [lo_e, lo_c] = *f.terms().begin();
  const auto& [hi_e, hi_c] = *std::next(f.terms().begin());
  const auto lo = to_small(lo_c);
  const auto hi = to_small(hi_c);
  if (!lo || !hi || lo_e.l_exp != 0) return result;

  // After sign normalization lo is always +1.
  const bool positive_family = lo_e.m_exp == 0 && hi_e.m_exp > 0;
  const bool mirror_family = lo_e.m_exp > 0 && hi_e.m_exp == 0;
  const std::int64_t m = positive_family ? hi_e.m_exp : lo_e.m_exp;
  if ((!positive_family && !mirror_family) || m % 2 != 0) return result;
  const std::int64_t sign = positive_family ? 1 : -1;

  if (hi_e.l_exp == 1 && *hi == 1) {
    // 1 + M^{2a} L  or  M^{-2a} + L
    const std::int64_t a = m / 2;
    if (a >= 3 && a % 2 == 1) result.candidates.emplace_back(sign * a, 2);
  } else if (hi_e.l_exp == 2 && *hi == -1) {
    // -1 + M^{2ab} L^2  or  -M^{-2ab} + L^2, both up to sign
    const std::int64_t ab = m / 2;
    if (ab >= 4) {
      for (const auto& [p, q] : coprime_factorizations(ab)) {
        if (p >= 3) result.candidates.emplace_back(sign * q, p);
      }
    }
  }
  result.unique = result.candidates.size() == 1;
  return result;
}

DetectionResult detect_with_degree(const BiPoly& f,
                                   std::int64_t alexander_degree) {
  DetectionResult result = detect_torus_from_apoly(f);
  if (result.is_unknot) {
    if (alexander_degree != 0) {
      result.is_unknot = false;
      result.unique = false;
    }
    return result;
  }
  std::erase_if(result.candidates, [&](const TorusKnot& k) {
    return (k.p() - 1) * (k.b() - 1) != alexander_degree;
  });
  result.unique = result.candidates.size() == 1;
  return result;
}

bool detectability(const TorusKnot& k) {
  if (k.p() == 2 || k.b() == 2) return true;
  return is_prime_power(k.p()) && is_prime_power(k.b());
}

}  // namespace knotpoly
