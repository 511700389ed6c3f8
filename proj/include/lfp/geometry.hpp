#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lfp/matrix.hpp"
#include "lfp/permutation.hpp"
#include "lfp/rational.hpp"

namespace lfp {

/// Supporting hyperplane {x : normal . x = offset} of a facet. The normal is
/// a primitive integer vector pointing outward, so every vertex satisfies
/// normal . x <= offset.
struct Facet {
  std::vector<Rational> normal;
  Rational offset;
  std::vector<std::size_t> vertex_indices;
};

/// Full-dimensional convex polytope given by an ordered vertex list. The
/// list is kept as given; construction rejects ragged, repeated or
/// lower-dimensional input and computes the facets once.
class Polytope {
 public:
  Polytope(std::size_t dim, std::vector<Point> vertices);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool is_simplex() const { return vertices_.size() == dim_ + 1; }

  bool contains(const Point& x) const;
  bool contains_interior(const Point& x) const;

  Polytope dilate(const Rational& m) const;
  /// Same vertex set in a different order; `order[i]` is the old index of
  /// the new i-th vertex.
  Polytope reorder(std::span<const std::size_t> order) const;

 private:
  std::size_t dim_;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
};

/// Vertical segment of a polytope over a base point. Both ends are empty
/// when the base point lies outside the projection.
struct Fiber {
  Point base;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool empty() const { return !lo.has_value(); }
};

/// Drops the last k coordinates of a point.
Point drop_last(const Point& p, std::size_t k);

/// Image under the map forgetting the last k coordinates. Duplicate and
/// non-extreme images are removed; survivors keep their first-seen order.
/// Throws DimensionError unless 0 <= k < dim.
Polytope project(const Polytope& p, std::size_t k);

/// Convex hull of a full-dimensional finite point set; duplicates and
/// non-extreme points are dropped.
Polytope convex_hull(std::size_t dim, std::vector<Point> points);

const std::vector<Facet>& facets(const Polytope& p);

/// Pulling triangulation from the lowest-indexed vertex. Each simplex lists
/// its vertices in increasing original index order.
std::vector<Polytope> triangulate(const Polytope& p);
/// Same triangulation as index sets into p.vertices().
std::vector<std::vector<std::size_t>> triangulate_indices(const Polytope& p);

/// Intersection of the vertical line over y (a point of R^{d-1}) with p.
Fiber fiber(const Point& y, const Polytope& p);

/// Membership in the nonnegative part: x in p, strictly above the bottom of
/// its fiber.
bool omega_contains(const Point& x, const Polytope& p);

/// Sign of the facet opposite vertex i of a general-position simplex,
/// computed from the determinant ratios of the X-matrices.
/// Throws GeneralPositionError if a needed determinant vanishes.
int facet_sign(const Polytope& simplex, std::size_t i);

/// Same sign from the definition: +1 if the facet centroid is the top of its
/// fiber, -1 if it is the bottom, 0 otherwise.
int facet_sign_geometric(const Polytope& simplex, std::size_t i);

/// Euclidean volume as the sum of |det|/d! over the pulling triangulation.
Rational volume(const Polytope& p);

/// Volume of a d-simplex from its bordered vertex matrix.
Rational simplex_volume(std::span<const Point> vertices);

struct GeneralPositionVerdict {
  bool ok = true;
  /// On failure: k and the (k+1)-subset whose first-k projection is
  /// affinely dependent.
  std::size_t level = 0;
  std::vector<std::size_t> subset;
};

/// For every k in 0..d-1 and every (k+1)-subset U of the vertices, the
/// first-k projections of U must be affinely independent.
GeneralPositionVerdict general_position_check(const Polytope& p);

// ---------------------------------------------------------------------------
// Simplex matrices. The simplex has vertices v_0..v_d; the apex v_d plays the
// role of the distinguished last vertex, sigma permutes {0..d-1}.

/// X(sigma,k): rows (1, first k coords of v_sigma(j)) for j < k, then the apex.
RatMatrix x_matrix(const Polytope& simplex, const Permutation& sigma, std::size_t k);
/// Y(sigma,k): rows (1, first k-1 coords of v_sigma(j)) for j < k.
RatMatrix y_matrix(const Polytope& simplex, const Permutation& sigma, std::size_t k);
/// Shifted variants built from x_i - apex: Xhat has no border column.
RatMatrix xhat_matrix(const Polytope& simplex, const Permutation& sigma, std::size_t k);
RatMatrix yhat_matrix(const Polytope& simplex, const Permutation& sigma, std::size_t k);

// ---------------------------------------------------------------------------
// Grid scans.

/// Axis-aligned box sampled on the grid (1/resolution) Z^d.
struct GridBox {
  std::vector<Integer> lo;  // in grid units
  std::vector<Integer> hi;  // in grid units, inclusive
  Integer resolution = 1;

  std::size_t dim() const { return lo.size(); }
  /// Number of grid points, saturating at `cap + 1`.
  unsigned long long count(unsigned long long cap) const;
};

/// Smallest grid box containing the given points.
GridBox bounding_box(std::span<const Point> points, const Integer& resolution = 1);

/// Calls fn on every grid point of the box, last coordinate fastest.
/// Throws BudgetExceeded if the box has more than `budget` points.
void for_each_grid_point(const GridBox& box, unsigned long long budget,
                         const std::function<void(const Point&)>& fn);

}  // namespace lfp
