#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lfp/ehrhart.hpp"
#include "lfp/lattice_face.hpp"
#include "oracles.hpp"

using namespace lfp;
using fixtures::tall_simplex;

namespace {

UniPoly poly(std::vector<long> c) { return UniPoly(std::vector<Rational>(c.begin(), c.end())); }

long scan_simplex(const std::vector<Point>& verts, long m, bool (*pred)(const oracle::Barycentric&, const Point&)) {
  const auto scaled = oracle::scaled(verts, m);
  const oracle::Barycentric b(scaled);
  return oracle::count_points(scaled, 1, [&](const Point& x) { return pred(b, x); });
}

bool bottom(const oracle::Barycentric& b, const Point& x) { return oracle::in_closed(b, x) && !oracle::in_omega(b, x); }

// Mirror x_d -> -x_d turns tops into bottoms.
bool top_of(const std::vector<Point>& verts, long m, const Point& x) {
  std::vector<Point> flipped = oracle::scaled(verts, m);
  for (auto& v : flipped) v.back() = -v.back();
  Point y = x;
  y.back() = -y.back();
  return bottom(oracle::Barycentric(flipped), y);
}

std::vector<Polytope> generated_instances() {
  std::vector<Polytope> out;
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::uint64_t seed = 0; seed < 5; ++seed) out.push_back(generate_lattice_face_simplex(d, seed));
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::uint64_t seed = 0; seed < 3; ++seed) out.push_back(generate_lattice_face_polytope(d, d + 3, seed));
  return out;
}

}  // namespace

TEST_CASE("closed form examples") {
  for (long k = 1; k <= 3; ++k) {
    const EhrhartResult r = ehrhart_formula(tall_simplex(k));
    CHECK(r.poly == poly({1, 4, 12, 40 * k}));
    CHECK(r.per_level_volumes == std::vector<Rational>{1, 4, 12, 40 * k});
    CHECK(r.method == EhrhartMethod::formula);
    CHECK(ehrhart_formula(project(tall_simplex(k), 1)).poly == poly({1, 4, 12}));
  }
  for (long b : {1L, 3L, 8L}) CHECK(ehrhart_formula(fixtures::segment(0, b)).poly == poly({1, b}));
  CHECK(ehrhart_formula(fixtures::roof_triangle()).poly == poly({1, 2, 1}));
}

TEST_CASE("closed form rejects polytopes that are not lattice-face") {
  try {
    ehrhart_formula(fixtures::steep_triangle());
    FAIL("expected a rejection");
  } catch (const NotLatticeFaceError& e) {
    CHECK(std::string(e.what()).find("{v1,v3}") != std::string::npos);
  }
  CHECK_THROWS_AS(ehrhart_formula(fixtures::unit_cube(2)), NotLatticeFaceError);
  CHECK_THROWS_AS(interior_formula(fixtures::steep_triangle()), NotLatticeFaceError);
}

TEST_CASE("interior polynomial and reciprocity") {
  CHECK(interior_formula(tall_simplex(1)) == poly({-1, 4, -12, 40}));
  CHECK(interior_formula(fixtures::segment(0, 6)) == poly({-1, 6}));
  for (const Polytope& p : generated_instances()) {
    const UniPoly i = ehrhart_formula(p).poly;
    const UniPoly inner = interior_formula(p);
    const Rational sign = p.dim() % 2 == 0 ? 1 : -1;
    CHECK(i.compose_linear(-1, 0) == sign * inner);
    const VerifyReport r = check_reciprocity(p);
    CHECK(r.ok());
  }
  CHECK(check_reciprocity(tall_simplex(1)).ok());
}

TEST_CASE("brute count examples") {
  const Polytope p = tall_simplex(1);
  CHECK(brute_count(p, 1, Region::full) == 57);
  CHECK(brute_count(p, 1, Region::omega) == 40);
  CHECK(brute_count(p, 1, Region::interior) == 40 - 12 + 4 - 1);
  CHECK(brute_count(fixtures::segment(0, 1), 1, Region::interior) == 0);
  CHECK(brute_count(fixtures::segment(0, 1), 3, Region::full) == 4);
  CHECK(brute_count(fixtures::unit_cube(3), 2, Region::full) == 27);
  CHECK(brute_count(fixtures::unit_cube(3), 2, Region::interior) == 1);
  CHECK_THROWS_AS(brute_count(p, 0, Region::full), DomainError);
  CHECK_THROWS_AS(brute_count(p, 50, Region::full, 1000), BudgetExceeded);
}

TEST_CASE("brute counts agree with the barycentric scan") {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 3);
    const Polytope s = fixtures::random_simplex(rng, d, 4, 2);
    for (long m = 1; m <= 2; ++m) {
      CHECK(brute_count(s, m, Region::full) == scan_simplex(s.vertices(), m, oracle::in_closed));
      CHECK(brute_count(s, m, Region::interior) == scan_simplex(s.vertices(), m, oracle::in_open));
      CHECK(brute_count(s, m, Region::omega) == scan_simplex(s.vertices(), m, oracle::in_omega));
    }
  }
}

TEST_CASE("interpolation") {
  const EhrhartResult r = interpolate_ehrhart(tall_simplex(1));
  CHECK(r.poly == poly({1, 4, 12, 40}));
  CHECK(r.method == EhrhartMethod::interpolation);
  CHECK(interpolate_ehrhart(fixtures::unit_cube(2)).poly == poly({1, 2, 1}));
  CHECK(interpolate_ehrhart(fixtures::unit_cube(3)).poly == poly({1, 3, 3, 1}));
  CHECK(interpolate_ehrhart(fixtures::steep_triangle()).poly == poly({1, 2, 1}));
  const Polytope half(1, {make_point({0}), Point{Rational(Integer(1), Integer(2))}});
  CHECK_THROWS_AS(interpolate_ehrhart(half), DomainError);
}

TEST_CASE("closed form equals interpolation on generated instances") {
  for (const Polytope& p : generated_instances()) {
    CHECK(is_lattice_face(p).lattice_face);
    const EhrhartResult f = ehrhart_formula(p);
    CHECK(f.poly == interpolate_ehrhart(p).poly);
    CHECK(f.poly.leading() == volume(p));
    CHECK(f.poly(0) == Rational(1));
    CHECK(count_omega_polytope(p) == volume(p).numerator());
    CHECK(check_omega_volume(p).ok());
  }
}

TEST_CASE("dropping the last coordinate removes exactly the top-degree term") {
  for (const Polytope& p : generated_instances()) {
    if (p.dim() < 2) continue;
    const UniPoly diff = ehrhart_formula(p).poly - ehrhart_formula(project(p, 1)).poly;
    CHECK(diff == UniPoly::monomial(static_cast<unsigned>(p.dim()), volume(p)));
  }
  const UniPoly diff = ehrhart_formula(tall_simplex(2)).poly - ehrhart_formula(fixtures::tall_base()).poly;
  CHECK(diff == UniPoly::monomial(3, 80));
}

TEST_CASE("bottom and top boundaries biject onto the projection") {
  const Polytope p = tall_simplex(1);
  const UniPoly base = ehrhart_formula(project(p, 1)).poly;
  for (long m = 1; m <= 2; ++m) {
    const long nb = scan_simplex(p.vertices(), m, bottom);
    CHECK(Rational(nb) == base(m));
    const auto scaled = oracle::scaled(p.vertices(), m);
    const long pb = oracle::count_points(scaled, 1, [&](const Point& x) { return top_of(p.vertices(), m, x); });
    CHECK(Rational(pb) == base(m));
  }
}

TEST_CASE("full count splits into the nonnegative part and the shadow") {
  std::vector<Polytope> cases = generated_instances();
  cases.push_back(tall_simplex(1));
  for (const Polytope& p : cases) {
    if (p.dim() < 2) continue;
    for (long m = 1; m <= 2; ++m)
      CHECK(brute_count(p, m, Region::full) ==
            brute_count(p, m, Region::omega) + brute_count(project(p, 1), m, Region::full));
  }
}
