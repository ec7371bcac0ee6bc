#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "knotpoly/bipoly.hpp"
#include "knotpoly/slope.hpp"
#include "knotpoly/torus_knot.hpp"

namespace knotpoly {

/// Lattice point (a, b) standing for the monomial M^b L^a.
struct LatticePoint {
  std::int64_t a = 0;  // L exponent
  std::int64_t b = 0;  // M exponent

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonPolygon {
  std::vector<LatticePoint> lattice_points;  // sorted, unique
  std::vector<LatticePoint> hull_vertices;   // counterclockwise, no collinear
  std::vector<Slope> edge_slopes;            // delta b / delta a per edge
};

/// Exact integer convex hull of the exponent lattice. A segment has a single
/// edge, a point none. Throws Error(invalid_argument) for f == 0.
NewtonPolygon newton_polygon(const BiPoly& f);

struct Thinness {
  enum class Kind { point, thin, not_thin };
  Kind kind = Kind::point;
  std::optional<Rational> slope;  // set iff kind == thin
  bool vertical = false;          // collinear along delta a == 0 (not_thin)
};

Thinness thinness(const BiPoly& f);

/// Deduplicated, sorted edge slopes of the Newton polygon; each one is a
/// strict boundary slope candidate.
std::vector<Slope> edge_boundary_slopes(const BiPoly& f);

/// All (p, q) with 2 <= p < q, p*q == n, gcd(p, q) == 1. Requires n >= 4.
std::vector<std::pair<std::int64_t, std::int64_t>> coprime_factorizations(
    std::int64_t n);

struct DetectionResult {
  std::vector<TorusKnot> candidates;
  bool unique = false;
  bool is_unknot = false;
};

/// Matches f against the torus-knot enhanced A-polynomial templates. The
/// constant 1 is the unknot; L-degree one templates pin down T(a,2); L-degree
/// two templates only fix ab and the sign, so every coprime factorization of
/// ab with both factors >= 3 is a candidate. Anything else yields no
/// candidates.
DetectionResult detect_torus_from_apoly(const BiPoly& f);

/// Narrows the candidates by (p-1)(q-1) == alexander_degree (the span width
/// 2g of the symmetrized Alexander polynomial).
DetectionResult detect_with_degree(const BiPoly& f, std::int64_t alexander_degree);

/// Whether the enhanced A-polynomial singles out k among torus knots:
/// |a| == 2 or b == 2, or |a| and b are both prime powers.
bool detectability(const TorusKnot& k);

}  // namespace knotpoly
