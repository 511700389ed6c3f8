#include <algorithm>
#include <random>
#include <set>

#include "lfp/errors.hpp"
#include "lfp/lattice_face.hpp"

namespace lfp {

namespace {

constexpr int kAttempts = 20000;

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Smallest positive integer b such that adding b*Z to the value at point i
// keeps every interpolating affine function over the first k coordinates
// integral, for all subsets of size k+1 containing i, k <= j.
Integer bump_modulus(const std::vector<Point>& pts, std::size_t i, std::size_t j) {
  Integer b = 1;
  const std::size_t n = pts.size();
  for (std::size_t k = 1; k <= j; ++k) {
    if (k + 1 > n) break;
    for (const auto& u : subsets(n, k + 1)) {
      auto pos = std::find(u.begin(), u.end(), i);
      if (pos == u.end()) continue;
      RatMatrix a(k + 1, k + 1);
      std::vector<Rational> rhs(k + 1);
      for (std::size_t r = 0; r <= k; ++r) {
        a(r, 0) = 1;
        for (std::size_t c = 0; c < k; ++c) a(r, c + 1) = pts[u[r]][c];
        rhs[r] = (u[r] == i) ? 1 : 0;
      }
      for (const auto& c : solve(a, rhs)) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), c.denominator().get_mpz_t());
    }
  }
  return b;
}

// Every (k+1)-subset projected to its first k coordinates is affinely
// independent; checked for the newest level only.
bool independent_at(const std::vector<Point>& pts, std::size_t k) {
  if (k + 1 > pts.size()) return true;
  for (const auto& u : subsets(pts.size(), k + 1)) {
    RatMatrix a(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      a(r, 0) = 1;
      for (std::size_t c = 0; c < k; ++c) a(r, c + 1) = pts[u[r]][c];
    }
    if (determinant(a).is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<Point>> attempt(std::size_t d, std::size_t n, std::mt19937_64& rng, long bound) {
  const long first = std::max<long>(static_cast<long>(n), std::min<long>(bound, 2 * static_cast<long>(n)));
  std::set<long> used;
  std::vector<Point> pts(n, Point(d));
  for (std::size_t i = 0; i < n; ++i) {
    long x;
    do x = uniform(rng, -first / 2, first - first / 2); while (!used.insert(x).second);
    pts[i][0] = x;
  }
  for (std::size_t j = 1; j < d; ++j) {
    std::vector<long> lin(j);
    for (auto& c : lin) c = uniform(rng, -1, 1);
    const long c0 = uniform(rng, -2, 2);
    std::vector<Integer> mods(n);
    for (std::size_t i = 0; i < n; ++i) mods[i] = bump_modulus(pts, i, j);
    for (std::size_t i = 0; i < n; ++i) {
      Rational h(c0);
      for (std::size_t m = 0; m < j; ++m) h += Rational(lin[m]) * pts[i][m];
      const long reach = std::max<long>(1, bound / 2);
      const long r = uniform(rng, -reach, reach);
      h += Rational(mods[i] * r);
      if (h.abs() > Rational(bound)) {
        // Fall back to the nearest allowed value inside the box.
        h -= Rational(mods[i] * r);
        if (h.abs() > Rational(bound)) return std::nullopt;
      }
      pts[i][j] = h;
    }
    if (!independent_at(pts, j + 1 < d ? j + 1 : d)) return std::nullopt;
  }
  if (d == 1 && !independent_at(pts, 1)) return std::nullopt;
  return pts;
}

// Points (p_1(t), ..., p_d(t)) at distinct integer nodes t, where p_j is an
// integer polynomial of degree j with leading coefficient +-1. Divided
// differences of such polynomials are integers and the change of basis from
// monomials to (1, p_1, ..., p_k) is unimodular, so every subset is
// independent and interpolates integrally.
std::optional<std::vector<Point>> attempt_curve(std::size_t d, std::size_t n, std::mt19937_64& rng, long bound) {
  const long w = static_cast<long>(n + 1) / 2;
  std::set<long> used;
  std::vector<long> nodes(n);
  for (auto& t : nodes) {
    do t = uniform(rng, -w, w); while (!used.insert(t).second);
  }
  std::vector<Point> pts(n, Point(d));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<long> roots = nodes;
    std::shuffle(roots.begin(), roots.end(), rng);
    const long sign = uniform(rng, 0, 1) ? 1 : -1;
    const long c0 = uniform(rng, -2, 2);
    std::vector<long> lin(j);
    for (auto& c : lin) c = uniform(rng, -1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      Integer lead = sign;
      for (std::size_t r = 0; r <= j; ++r) lead *= nodes[i] - roots[r];
      Rational h = Rational(lead) + Rational(c0);
      for (std::size_t m = 0; m < j; ++m) h += Rational(lin[m]) * pts[i][m];
      if (h.abs() > Rational(bound)) return std::nullopt;
      pts[i][j] = h;
    }
  }
  return pts;
}

Polytope generate(std::size_t d, std::size_t n, std::uint64_t seed, long bound) {
  if (d == 0) throw DimensionError("dimension must be positive");
  if (n < d + 1) throw DimensionError("need at least d+1 points");
  if (bound < 1) throw DomainError("coordinate bound must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  for (int t = 0; t < kAttempts; ++t) {
    const bool curve = d >= 4 || t >= kAttempts / 10;
    auto pts = curve ? attempt_curve(d, n, rng, bound) : attempt(d, n, rng, bound);
    if (!pts) continue;
    std::optional<Polytope> p;
    try {
      if (n == d + 1) {
        p.emplace(d, *pts);
      } else {
        p.emplace(convex_hull(d, *pts));
        if (p->size() < d + 1) continue;
      }
    } catch (const Error&) {
      continue;
    }
    if (n == d + 1) *p = canonical_order(*p);
    if (!is_lattice_face(*p).lattice_face)
      throw InvariantFailure("generated point set failed the lattice-face check");
    // Occasional dilation keeps the family from clustering at tiny volumes.
    if (uniform(rng, 0, 3) == 0) {
      bool fits = true;
      for (const auto& v : p->vertices())
        for (const auto& c : v) fits = fits && (c * 2).abs() <= Rational(bound);
      if (fits) *p = p->dilate(2);
    }
    return *p;
  }
  throw Error("no lattice-face configuration found within the attempt budget");
}

}  // namespace

Polytope generate_lattice_face_simplex(std::size_t d, std::uint64_t seed, long bound) {
  return generate(d, d + 1, seed, bound);
}

Polytope generate_lattice_face_polytope(std::size_t d, std::size_t n, std::uint64_t seed, long bound) {
  return generate(d, n, seed, bound);
}

}  // namespace lfp
