#include "lfp/geometry.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lfp/errors.hpp"

namespace lfp {

namespace {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::size_t affine_rank(const std::vector<Point>& pts, std::span<const std::size_t> idx) {
  if (idx.size() <= 1) return 0;
  const std::size_t d = pts[idx[0]].size();
  RatMatrix m(idx.size() - 1, d);
  for (std::size_t r = 1; r < idx.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) m(r - 1, c) = pts[idx[r]][c] - pts[idx[0]][c];
  return rank(m);
}

// Scales a nonzero rational vector to the primitive integer vector with the
// same direction.
std::vector<Rational> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& e : v) {
    const Integer den = e.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& e : v) {
    ints.push_back(e.numerator() * (l / e.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> out;
  for (auto& i : ints) out.emplace_back(Integer(i / g));
  return out;
}

// Brute-force supporting hyperplanes through d-subsets of a full-dimensional
// point set.
std::vector<Facet> compute_facets(std::size_t d, const std::vector<Point>& pts) {
  std::vector<Facet> out;
  for (const auto& s : subsets(pts.size(), d)) {
    RatMatrix diff(d - 1, d);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) diff(r - 1, c) = pts[s[r]][c] - pts[s[0]][c];
    std::vector<Rational> normal(d);
    bool nonzero = false;
    for (std::size_t c = 0; c < d; ++c) {
      Rational cof = determinant(d == 1 ? RatMatrix(0, 0) : [&] {
        RatMatrix m(d - 1, d - 1);
        for (std::size_t r = 0; r + 1 < d; ++r)
          for (std::size_t cc = 0, t = 0; cc < d; ++cc)
            if (cc != c) m(r, t++) = diff(r, cc);
        return m;
      }());
      normal[c] = (c % 2 == 0) ? cof : -cof;
      nonzero = nonzero || !normal[c].is_zero();
    }
    if (!nonzero) continue;
    normal = primitive(normal);
    Rational offset = dot(normal, pts[s[0]]);
    int pos = 0, neg = 0;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int sg = (dot(normal, pts[i]) - offset).sign();
      if (sg > 0) ++pos;
      if (sg < 0) ++neg;
      if (sg == 0) on.push_back(i);
    }
    if (pos > 0 && neg > 0) continue;
    if (pos > 0) {
      for (auto& e : normal) e = -e;
      offset = -offset;
    }
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Facet& f) {
      return f.normal == normal && f.offset == offset;
    });
    if (!dup) out.push_back(Facet{std::move(normal), std::move(offset), std::move(on)});
  }
  return out;
}

bool is_extreme(std::size_t d, const std::vector<Facet>& fs, std::size_t i) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fs)
    if (std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), i)) rows.push_back(f.normal);
  if (rows.size() < d) return false;
  return rank(RatMatrix::from_rows(rows)) == d;
}

}  // namespace

Polytope::Polytope(std::size_t dim, std::vector<Point> vertices) : dim_(dim), vertices_(std::move(vertices)) {
  if (dim_ == 0) throw DimensionError("polytope dimension must be at least 1");
  if (vertices_.size() < dim_ + 1) throw DimensionError("too few vertices for a full-dimensional polytope");
  for (const auto& v : vertices_)
    if (v.size() != dim_) throw DimensionError("vertex " + to_string(v) + " does not have " + std::to_string(dim_) + " coordinates");
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j]) throw DomainError("repeated vertex " + to_string(vertices_[i]));
  std::vector<std::size_t> all(vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (affine_rank(vertices_, all) != dim_) throw DimensionError("vertices do not span a full-dimensional polytope");
  facets_ = compute_facets(dim_, vertices_);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!is_extreme(dim_, facets_, i)) throw DomainError("point " + to_string(vertices_[i]) + " is not a vertex");
}

bool Polytope::contains(const Point& x) const {
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

bool Polytope::contains_interior(const Point& x) const {
  for (const auto& f : facets_)
    if (dot(f.normal, x) >= f.offset) return false;
  return true;
}

Polytope Polytope::dilate(const Rational& m) const {
  if (m.sign() <= 0) throw DomainError("dilation factor must be positive");
  std::vector<Point> vs = vertices_;
  for (auto& v : vs)
    for (auto& c : v) c *= m;
  return Polytope(dim_, std::move(vs));
}

Polytope Polytope::reorder(std::span<const std::size_t> order) const {
  if (order.size() != vertices_.size()) throw DimensionError("reorder needs one index per vertex");
  std::vector<Point> vs;
  for (std::size_t i : order) vs.push_back(vertices_.at(i));
  return Polytope(dim_, std::move(vs));
}

Point drop_last(const Point& p, std::size_t k) {
  if (k > p.size()) throw DimensionError("cannot drop more coordinates than the point has");
  return Point(p.begin(), p.end() - static_cast<std::ptrdiff_t>(k));
}

Polytope convex_hull(std::size_t dim, std::vector<Point> points) {
  std::vector<Point> pts;
  for (auto& q : points)
    if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(std::move(q));
  const auto fs = compute_facets(dim, pts);
  std::vector<Point> extreme;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (is_extreme(dim, fs, i)) extreme.push_back(pts[i]);
  return Polytope(dim, std::move(extreme));
}

Polytope project(const Polytope& p, std::size_t k) {
  if (k >= p.dim()) throw DimensionError("projection must leave at least one coordinate");
  if (k == 0) return p;
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(drop_last(v, k));
  return convex_hull(p.dim() - k, std::move(pts));
}

const std::vector<Facet>& facets(const Polytope& p) { return p.facets(); }

namespace {

void pull(const Polytope& p, const std::vector<std::size_t>& face, std::size_t k,
          std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == k + 1) {
    out.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> sub;
  for (const auto& f : p.facets()) {
    std::vector<std::size_t> meet;
    std::set_intersection(face.begin(), face.end(), f.vertex_indices.begin(), f.vertex_indices.end(),
                          std::back_inserter(meet));
    if (meet.size() < k || meet == face) continue;
    if (affine_rank(p.vertices(), meet) != k - 1) continue;
    if (std::binary_search(meet.begin(), meet.end(), apex)) continue;
    sub.insert(std::move(meet));
  }
  for (const auto& facet : sub) {
    std::vector<std::vector<std::size_t>> pieces;
    pull(p, facet, k - 1, pieces);
    for (auto& s : pieces) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate_indices(const Polytope& p) {
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> out;
  pull(p, all, p.dim(), out);
  return out;
}

std::vector<Polytope> triangulate(const Polytope& p) {
  std::vector<Polytope> out;
  for (const auto& s : triangulate_indices(p)) {
    std::vector<Point> vs;
    for (std::size_t i : s) vs.push_back(p.vertex(i));
    out.emplace_back(p.dim(), std::move(vs));
  }
  return out;
}

Fiber fiber(const Point& y, const Polytope& p) {
  const std::size_t d = p.dim();
  if (y.size() + 1 != d) throw DimensionError("fiber base must have dim - 1 coordinates");
  Fiber out{y, std::nullopt, std::nullopt};
  std::optional<Rational> lo, hi;
  for (const auto& f : p.facets()) {
    const Rational rest = f.offset - dot(std::span(f.normal).first(d - 1), y);
    const Rational& nd = f.normal[d - 1];
    if (nd.is_zero()) {
      if (rest.sign() < 0) return out;
      continue;
    }
    const Rational bound = rest / nd;
    if (nd.sign() > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else {
      if (!lo || bound > *lo) lo = bound;
    }
  }
  if (!lo || !hi || *lo > *hi) return out;
  out.lo = lo;
  out.hi = hi;
  return out;
}

bool omega_contains(const Point& x, const Polytope& p) {
  if (x.size() != p.dim()) throw DimensionError("point dimension mismatch");
  if (!p.contains(x)) return false;
  const Fiber f = fiber(drop_last(x, 1), p);
  return !f.empty() && x.back() > *f.lo;
}

RatMatrix x_matrix(const Polytope& s, const Permutation& sigma, std::size_t k) {
  RatMatrix m(k + 1, k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    const Point& v = j < k ? s.vertex(sigma[j]) : s.vertex(s.dim());
    m(j, 0) = 1;
    for (std::size_t c = 0; c < k; ++c) m(j, c + 1) = v[c];
  }
  return m;
}

RatMatrix y_matrix(const Polytope& s, const Permutation& sigma, std::size_t k) {
  RatMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Point& v = s.vertex(sigma[j]);
    m(j, 0) = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) m(j, c + 1) = v[c];
  }
  return m;
}

RatMatrix xhat_matrix(const Polytope& s, const Permutation& sigma, std::size_t k) {
  RatMatrix m(k, k);
  const Point& apex = s.vertex(s.dim());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < k; ++c) m(j, c) = s.vertex(sigma[j])[c] - apex[c];
  return m;
}

RatMatrix yhat_matrix(const Polytope& s, const Permutation& sigma, std::size_t k) {
  RatMatrix m(k, k);
  const Point& apex = s.vertex(s.dim());
  for (std::size_t j = 0; j < k; ++j) {
    m(j, 0) = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) m(j, c + 1) = s.vertex(sigma[j])[c] - apex[c];
  }
  return m;
}

int facet_sign(const Polytope& s, std::size_t i) {
  if (!s.is_simplex()) throw DimensionError("facet_sign needs a simplex");
  const std::size_t d = s.dim();
  if (i > d) throw DimensionError("facet index out of range");
  if (i == d) {
    const Permutation id = identity_permutation(d);
    const Rational y = determinant(y_matrix(s, id, d));
    if (y.is_zero()) throw GeneralPositionError("vanishing Y determinant");
    return -(determinant(x_matrix(s, id, d)) / y).sign();
  }
  Permutation sigma;
  for (std::size_t j = 0; j < d; ++j)
    if (j != i) sigma.push_back(j);
  sigma.push_back(i);
  const Rational below = determinant(x_matrix(s, sigma, d - 1));
  if (below.is_zero()) throw GeneralPositionError("vanishing X determinant below the top level");
  return (determinant(x_matrix(s, sigma, d)) / below).sign();
}

int facet_sign_geometric(const Polytope& s, std::size_t i) {
  if (!s.is_simplex()) throw DimensionError("facet_sign needs a simplex");
  const std::size_t d = s.dim();
  Point c(d);
  for (std::size_t j = 0; j <= d; ++j)
    if (j != i)
      for (std::size_t t = 0; t < d; ++t) c[t] += s.vertex(j)[t];
  for (auto& e : c) e /= Rational(static_cast<long>(d));
  const Fiber f = fiber(drop_last(c, 1), s);
  if (f.empty() || *f.lo == *f.hi) return 0;
  if (c.back() == *f.hi) return 1;
  if (c.back() == *f.lo) return -1;
  return 0;
}

Rational simplex_volume(std::span<const Point> vs) {
  const std::size_t d = vs.size() - 1;
  RatMatrix m(d + 1, d + 1);
  for (std::size_t r = 0; r <= d; ++r) {
    m(r, 0) = 1;
    for (std::size_t c = 0; c < d; ++c) m(r, c + 1) = vs[r][c];
  }
  return determinant(m).abs() / Rational(static_cast<unsigned long>(factorial(d)));
}

Rational volume(const Polytope& p) {
  Rational v;
  for (const auto& s : triangulate_indices(p)) {
    std::vector<Point> vs;
    for (std::size_t i : s) vs.push_back(p.vertex(i));
    v += simplex_volume(vs);
  }
  return v;
}

GeneralPositionVerdict general_position_check(const Polytope& p) {
  for (std::size_t k = 0; k < p.dim(); ++k) {
    for (const auto& u : subsets(p.size(), k + 1)) {
      RatMatrix m(k + 1, k + 1);
      for (std::size_t r = 0; r <= k; ++r) {
        m(r, 0) = 1;
        for (std::size_t c = 0; c < k; ++c) m(r, c + 1) = p.vertex(u[r])[c];
      }
      if (determinant(m).is_zero()) return GeneralPositionVerdict{false, k, u};
    }
  }
  return {};
}

unsigned long long GridBox::count(unsigned long long cap) const {
  unsigned long long n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    const Integer w = hi[i] - lo[i] + 1;
    if (!w.fits_ulong_p() || w.get_ui() > cap) return cap + 1;
    const unsigned long long wi = w.get_ui();
    if (n > (cap + 1) / wi + 1) return cap + 1;
    n *= wi;
    if (n > cap) return cap + 1;
  }
  return n;
}

GridBox bounding_box(std::span<const Point> points, const Integer& resolution) {
  GridBox box;
  box.resolution = resolution;
  const std::size_t d = points.front().size();
  for (std::size_t c = 0; c < d; ++c) {
    Rational mn = points.front()[c], mx = points.front()[c];
    for (const auto& p : points) {
      mn = std::min(mn, p[c]);
      mx = std::max(mx, p[c]);
    }
    box.lo.push_back((mn * Rational(resolution)).ceil());
    box.hi.push_back((mx * Rational(resolution)).floor());
  }
  return box;
}

void for_each_grid_point(const GridBox& box, unsigned long long budget,
                         const std::function<void(const Point&)>& fn) {
  if (box.count(budget) > budget) throw BudgetExceeded("grid scan exceeds the iteration budget");
  const std::size_t d = box.dim();
  for (std::size_t c = 0; c < d; ++c)
    if (box.hi[c] < box.lo[c]) return;
  std::vector<Integer> cur = box.lo;
  Point x(d);
  while (true) {
    for (std::size_t c = 0; c < d; ++c) x[c] = box.resolution == 1 ? Rational(cur[c]) : Rational(cur[c], box.resolution);
    fn(x);
    std::size_t c = d;
    while (c > 0) {
      --c;
      if (cur[c] < box.hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = box.lo[c];
      if (c == 0) return;
    }
  }
}

}  // namespace lfp
