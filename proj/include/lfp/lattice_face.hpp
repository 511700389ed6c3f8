#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfp/geometry.hpp"
#include "lfp/matrix.hpp"
#include "lfp/permutation.hpp"

namespace lfp {

/// First lattice-face condition that failed.
struct LatticeFaceWitness {
  enum class Kind { general_position, non_integral };
  Kind kind = Kind::non_integral;
  /// k: the subset has k+1 vertices and is viewed through its first k coordinates.
  std::size_t level = 0;
  std::vector<std::size_t> subset;
  /// For non_integral: coordinate (zero-based, >= level) expressed on the
  /// affine span, and which term of x_coordinate = c + sum a_i x_i was
  /// fractional (nullopt = the constant c).
  std::size_t coordinate = 0;
  std::optional<std::size_t> variable;
  Rational value;

  std::string describe() const;
};

struct LatticeFaceVerdict {
  bool lattice_face = false;
  GeneralPositionVerdict general_position;
  std::optional<LatticeFaceWitness> witness;
};

/// Decides the lattice-face property through the flat characterization: for
/// every k < d and every (k+1)-subset U, the remaining coordinates on the
/// span of U are integer affine functions of the first k coordinates.
LatticeFaceVerdict is_lattice_face(const Polytope& p);

/// z(sigma,1..d) with z(sigma,0) = 1 left implicit.
struct ZVector {
  Permutation sigma;
  std::vector<Rational> values;
};

/// z(sigma,k) = det X(sigma,k) / det Y(sigma,k).
/// Throws GeneralPositionError on a vanishing Y determinant.
ZVector z_values(const Polytope& simplex, const Permutation& sigma);

/// True iff every z(sigma,k)/z(sigma,k-1) is an integer.
bool ratio_integrality(const ZVector& zv);

/// x -> translation + x * matrix, with `matrix` unit upper triangular.
struct AffineTransform {
  std::vector<Rational> translation;
  RatMatrix matrix;

  Point apply(const Point& x) const;
  /// Exact inverse by back substitution.
  Point apply_inverse(const Point& y) const;
  bool is_integral() const;
};

/// The normalizing transform T_sigma whose k-th output coordinate is
/// det Xtilde(sigma,k;x) / det Y(sigma,k). When `claimed_lattice_face` is set
/// a non-integral entry throws NotLatticeFaceError.
AffineTransform t_sigma(const Polytope& simplex, const Permutation& sigma, bool claimed_lattice_face = false);

/// Lexicographically first vertex order with det X(1,d) > 0 and det Y(1,d) > 0.
/// Returns the reordered simplex; `order_out`, when given, receives the old
/// indices in new order.
Polytope canonical_order(const Polytope& simplex, std::vector<std::size_t>* order_out = nullptr);

bool is_canonical_order(const Polytope& simplex);

/// Deterministic lattice-face d-simplex with coordinates bounded by `bound`
/// in absolute value. Throws Error after the attempt budget is spent.
Polytope generate_lattice_face_simplex(std::size_t d, std::uint64_t seed, long bound = 10);

/// As above with `n` >= d+1 points, returned as their convex hull.
Polytope generate_lattice_face_polytope(std::size_t d, std::size_t n, std::uint64_t seed, long bound = 10);

/// Unit upper triangular integer shear x -> x*M plus integer translation;
/// preserves the lattice-face property.
Polytope shear(const Polytope& p, const RatMatrix& unit_upper, const Point& translation);

}  // namespace lfp
