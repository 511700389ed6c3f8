#pragma once

#include <random>
#include <vector>

#include "lfp/errors.hpp"
#include "lfp/geometry.hpp"

namespace fixtures {

using lfp::make_point;
using lfp::Point;
using lfp::Polytope;
using lfp::Rational;

// conv{(0,0,0),(4,0,0),(3,6,0),(2,2,10k)}
inline Polytope tall_simplex(long k) {
  return Polytope(3, {make_point({0, 0, 0}), make_point({4, 0, 0}), make_point({3, 6, 0}), make_point({2, 2, 10 * k})});
}

inline Polytope tall_base() { return Polytope(2, {make_point({0, 0}), make_point({4, 0}), make_point({3, 6})}); }

// Not lattice-face: the edge from (0,0) to (2,1) only meets even x.
inline Polytope steep_triangle() { return Polytope(2, {make_point({0, 0}), make_point({2, 0}), make_point({2, 1})}); }

inline Polytope roof_triangle() { return Polytope(2, {make_point({0, 0}), make_point({1, 1}), make_point({2, 0})}); }

inline Polytope segment(long a, long b) { return Polytope(1, {make_point({a}), make_point({b})}); }

inline Polytope unit_cube(std::size_t d) {
  std::vector<Point> pts;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i) & 1u;
    pts.push_back(p);
  }
  return Polytope(d, pts);
}

inline Rational small_rational(std::mt19937_64& rng, long span, long max_den) {
  std::uniform_int_distribution<long> num(-span * max_den, span * max_den), den(1, max_den);
  const long q = den(rng);
  return Rational(lfp::Integer(num(rng) % (span * q + 1)), lfp::Integer(q));
}

// Random simplex in general position with coordinates in [-span, span] and
// denominators up to max_den.
inline Polytope random_simplex(std::mt19937_64& rng, std::size_t d, long span = 5, long max_den = 1) {
  while (true) {
    std::vector<Point> pts(d + 1, Point(d));
    for (auto& p : pts)
      for (auto& c : p) c = small_rational(rng, span, max_den);
    try {
      Polytope p(d, pts);
      if (lfp::general_position_check(p).ok) return p;
    } catch (const lfp::Error&) {
    }
  }
}

}  // namespace fixtures
