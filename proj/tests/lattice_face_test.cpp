#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "lfp/lattice_face.hpp"
#include "oracles.hpp"

using namespace lfp;
using fixtures::tall_simplex;

namespace {

using Kind = LatticeFaceWitness::Kind;

oracle::Rows x_rows(const std::vector<Point>& v, const Permutation& sigma, std::size_t k, const Point& last) {
  std::vector<Point> pts;
  for (std::size_t j = 0; j < k; ++j) pts.push_back(v[sigma[j]]);
  pts.push_back(last);
  return oracle::bordered(pts, k);
}

oracle::Rows y_rows(const std::vector<Point>& v, const Permutation& sigma, std::size_t k) {
  std::vector<Point> pts;
  for (std::size_t j = 0; j < k; ++j) pts.push_back(v[sigma[j]]);
  return oracle::bordered(pts, k - 1);
}

Rational z_oracle(const Polytope& s, const Permutation& sigma, std::size_t k) {
  return oracle::cofactor_det(x_rows(s.vertices(), sigma, k, s.vertex(s.dim()))) /
         oracle::cofactor_det(y_rows(s.vertices(), sigma, k));
}

// k-th coordinate of T_sigma(x): the apex row of X(sigma,k) replaced by x.
Point t_oracle(const Polytope& s, const Permutation& sigma, const Point& x) {
  Point out(s.dim());
  for (std::size_t k = 1; k <= s.dim(); ++k)
    out[k - 1] = oracle::cofactor_det(x_rows(s.vertices(), sigma, k, x)) /
                 oracle::cofactor_det(y_rows(s.vertices(), sigma, k));
  return out;
}

bool valid_order(const std::vector<Point>& v) {
  const std::size_t d = v.size() - 1;
  std::vector<Point> head(v.begin(), v.begin() + static_cast<long>(d));
  return oracle::cofactor_det(oracle::bordered(v, d)).sign() > 0 &&
         oracle::cofactor_det(oracle::bordered(head, d - 1)).sign() > 0;
}

bool all_integer(const Polytope& p) {
  for (const auto& v : p.vertices())
    for (const auto& c : v)
      if (!c.is_integer()) return false;
  return true;
}

RatMatrix random_shear(std::mt19937_64& rng, std::size_t d) {
  RatMatrix m = RatMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
  return m;
}

Point random_shift(std::mt19937_64& rng, std::size_t d) {
  Point t(d);
  for (auto& c : t) c = static_cast<long>(rng() % 11) - 5;
  return t;
}

}  // namespace

TEST_CASE("lattice-face examples") {
  CHECK(is_lattice_face(fixtures::roof_triangle()).lattice_face);
  for (long k = 1; k <= 3; ++k) CHECK(is_lattice_face(tall_simplex(k)).lattice_face);
  CHECK(is_lattice_face(fixtures::segment(0, 5)).lattice_face);
  CHECK_FALSE(is_lattice_face(Polytope(1, {make_point({0}), Point{Rational(Integer(5), Integer(2))}})).lattice_face);
}

TEST_CASE("steep triangle witness") {
  const LatticeFaceVerdict v = is_lattice_face(fixtures::steep_triangle());
  CHECK_FALSE(v.lattice_face);
  REQUIRE(v.witness.has_value());
  const LatticeFaceWitness& w = *v.witness;
  CHECK(w.kind == Kind::non_integral);
  CHECK(w.level == 1);
  CHECK(w.subset == std::vector<std::size_t>{0, 2});
  CHECK(w.coordinate == 1);
  REQUIRE(w.variable.has_value());
  CHECK(*w.variable == 0);
  CHECK(w.value == Rational(Integer(1), Integer(2)));
  CHECK(w.describe().find("{v1,v3}") != std::string::npos);
  CHECK(w.describe().find("1/2") != std::string::npos);
  CHECK_FALSE(v.general_position.ok);
  CHECK(v.general_position.subset == std::vector<std::size_t>{1, 2});
}

TEST_CASE("standard triangle fails on a vertical edge") {
  const LatticeFaceVerdict v = is_lattice_face(Polytope(2, {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})}));
  CHECK_FALSE(v.lattice_face);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == Kind::general_position);
  CHECK(v.witness->level == 1);
  CHECK(v.witness->subset == std::vector<std::size_t>{0, 2});
}

TEST_CASE("the checker agrees with the flat interpolation oracle") {
  std::mt19937_64 rng(43);
  int accepted = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 3);
    std::vector<Point> pts(d + 1, Point(d));
    for (auto& p : pts)
      for (auto& c : p) c = fixtures::small_rational(rng, 3, t % 4 == 0 ? 2 : 1);
    std::optional<Polytope> poly;
    try {
      poly.emplace(d, pts);
    } catch (const Error&) {
      continue;
    }
    const bool got = is_lattice_face(*poly).lattice_face;
    CHECK(got == oracle::flat_lattice_face(pts));
    if (got) {
      ++accepted;
      CHECK(all_integer(*poly));
    }
  }
  CHECK(accepted > 5);
}

TEST_CASE("z values") {
  for (long k = 1; k <= 3; ++k) {
    const ZVector z = z_values(tall_simplex(k), identity_permutation(3));
    CHECK(z.values == std::vector<Rational>{2, 2, 10 * k});
    CHECK(ratio_integrality(z));
  }
  const Polytope p = tall_simplex(1);
  for (const auto& sigma : all_permutations(3)) {
    const ZVector z = z_values(p, sigma);
    CHECK(z.values.back() == Rational(10));
    for (std::size_t k = 1; k <= 3; ++k) CHECK(z.values[k - 1] == z_oracle(p, sigma, k));
  }
  CHECK(z_values(fixtures::segment(0, 7), {0}).values == std::vector<Rational>{7});
  CHECK_THROWS_AS(z_values(Polytope(2, {make_point({0, 0}), make_point({0, 1}), make_point({1, 0})}), {0, 1}),
                  GeneralPositionError);
}

TEST_CASE("ratio integrality") {
  CHECK(ratio_integrality(ZVector{{0, 1}, {1, Rational(Integer(3), Integer(2))}}) == false);
  CHECK(ratio_integrality(ZVector{{0, 1}, {3, -6}}));
  CHECK_FALSE(ratio_integrality(ZVector{{0}, {Rational(Integer(1), Integer(2))}}));
}

TEST_CASE("T_sigma on the tall simplex") {
  const Polytope p = tall_simplex(1);
  const AffineTransform t = t_sigma(p, identity_permutation(3), true);
  CHECK(t.apply(p.vertex(0)) == make_point({0, 0, 0}));
  CHECK(t.apply(p.vertex(3)) == make_point({2, 2, 10}));
  CHECK(t.is_integral());
  CHECK(determinant(t.matrix) == Rational(1));
  const Polytope skew(2, {make_point({0, 0}), make_point({2, 1}), make_point({3, 0})});
  CHECK_FALSE(is_lattice_face(skew).lattice_face);
  for (const auto& sigma : all_permutations(2)) {
    CHECK_FALSE(t_sigma(skew, sigma).is_integral());
    CHECK_THROWS_AS(t_sigma(skew, sigma, true), NotLatticeFaceError);
  }
}

TEST_CASE("T_sigma images and matrix shape") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 4);
    const Polytope s = fixtures::random_simplex(rng, d, 4, 2);
    for (const auto& sigma : all_permutations(d)) {
      const AffineTransform tr = t_sigma(s, sigma);
      for (std::size_t i = 0; i < d; ++i) {
        CHECK(tr.matrix(i, i) == Rational(1));
        for (std::size_t j = 0; j < i; ++j) CHECK(tr.matrix(i, j).is_zero());
      }
      for (std::size_t j = 0; j < d; ++j) {
        const Point img = tr.apply(s.vertex(sigma[j]));
        for (std::size_t c = j; c < d; ++c) CHECK(img[c].is_zero());
      }
      CHECK(tr.apply(s.vertex(d)) == z_values(s, sigma).values);
      Point x(d);
      for (auto& c : x) c = fixtures::small_rational(rng, 4, 3);
      CHECK(tr.apply(x) == t_oracle(s, sigma, x));
      CHECK(tr.apply_inverse(tr.apply(x)) == x);
    }
  }
}

TEST_CASE("T_sigma is a lattice bijection on generated lattice-face simplices") {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const Polytope s = generate_lattice_face_simplex(d, seed);
      for (const auto& sigma : all_permutations(d)) {
        const AffineTransform tr = t_sigma(s, sigma, true);
        CHECK(tr.is_integral());
        CHECK(determinant(tr.matrix) == Rational(1));
        CHECK(ratio_integrality(z_values(s, sigma)));
        std::vector<long> lo(d, -2), hi(d, 2);
        oracle::scan(lo, hi, 1, [&](const Point& x) {
          const Point y = tr.apply(x);
          for (const auto& c : y) CHECK(c.is_integer());
          CHECK(tr.apply_inverse(y) == x);
          const Point back = tr.apply_inverse(x);
          for (const auto& c : back) CHECK(c.is_integer());
        });
      }
    }
  }
}

TEST_CASE("canonical order") {
  const Polytope p = tall_simplex(1);
  CHECK(is_canonical_order(p));
  std::vector<std::size_t> order;
  const Polytope same = canonical_order(p, &order);
  CHECK(order == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(same.vertices() == p.vertices());
  const std::size_t swap[] = {1, 0, 2, 3};
  CHECK_FALSE(is_canonical_order(p.reorder(swap)));
  CHECK(oracle::cofactor_det(oracle::bordered(p.vertices(), 3)) == Rational(240));
}

TEST_CASE("canonical order is the first valid order") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 3);
    const Polytope s = fixtures::random_simplex(rng, d, 4, 2);
    std::vector<std::size_t> order;
    const Polytope c = canonical_order(s, &order);
    CHECK(is_canonical_order(c));
    CHECK(valid_order(c.vertices()));
    std::vector<std::size_t> perm(d + 1);
    for (std::size_t i = 0; i <= d; ++i) perm[i] = i;
    std::vector<std::size_t> expected;
    do {
      std::vector<Point> v;
      for (std::size_t i : perm) v.push_back(s.vertex(i));
      if (valid_order(v)) {
        expected = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(order == expected);
  }
}

TEST_CASE("generator") {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Polytope s = generate_lattice_face_simplex(d, seed);
      CHECK(s.dim() == d);
      CHECK(s.is_simplex());
      CHECK(is_canonical_order(s));
      CHECK(all_integer(s));
      for (const auto& v : s.vertices())
        for (const auto& c : v) CHECK(c.abs() <= Rational(10));
      CHECK(is_lattice_face(s).lattice_face);
      CHECK(oracle::flat_lattice_face(s.vertices()));
      CHECK(is_lattice_face(s.dilate(3)).lattice_face);
      CHECK(generate_lattice_face_simplex(d, seed).vertices() == s.vertices());
    }
  }
  CHECK(generate_lattice_face_simplex(2, 1).vertices() != generate_lattice_face_simplex(2, 2).vertices());
  const Polytope small = generate_lattice_face_simplex(3, 9, 6);
  for (const auto& v : small.vertices())
    for (const auto& c : v) CHECK(c.abs() <= Rational(6));
}

TEST_CASE("generator with extra points") {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Polytope p = generate_lattice_face_polytope(d, d + 3, seed);
      CHECK(p.dim() == d);
      CHECK(p.size() >= d + 1);
      CHECK(p.size() <= d + 3);
      CHECK(all_integer(p));
      CHECK(is_lattice_face(p).lattice_face);
      CHECK(oracle::flat_lattice_face(p.vertices()));
    }
  }
}

TEST_CASE("shears and integer translations preserve the lattice-face property") {
  std::mt19937_64 rng(59);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Polytope s = generate_lattice_face_simplex(d, seed);
      const Polytope moved = shear(s, random_shear(rng, d), random_shift(rng, d));
      CHECK(is_lattice_face(moved).lattice_face);
    }
  }
  const Polytope bad = fixtures::steep_triangle();
  for (int t = 0; t < 10; ++t) {
    const Polytope moved = shear(bad, random_shear(rng, 2), random_shift(rng, 2));
    CHECK_FALSE(is_lattice_face(moved).lattice_face);
  }
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
    const Polytope s = fixtures::random_simplex(rng, d, 3, 2);
    const Polytope moved = shear(s, random_shear(rng, d), random_shift(rng, d));
    CHECK(is_lattice_face(moved).lattice_face == is_lattice_face(s).lattice_face);
  }
}
