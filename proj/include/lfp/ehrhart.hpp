#pragma once

#include <vector>

#include "lfp/errors.hpp"
#include "lfp/geometry.hpp"
#include "lfp/poly.hpp"
#include "lfp/verify.hpp"

namespace lfp {

enum class EhrhartMethod { formula, interpolation };

struct EhrhartResult {
  /// Polynomial in m.
  UniPoly poly;
  /// Vol_k of the (d-k)-fold projection for k = 0..d; empty for interpolation.
  std::vector<Rational> per_level_volumes;
  EhrhartMethod method = EhrhartMethod::formula;
};

/// i(P,m) = sum_k Vol_k(pi^{d-k}(P)) m^k for a lattice-face polytope. Throws
/// NotLatticeFaceError carrying the witness otherwise. The volumes are
/// cross-checked against signed Omega counts of triangulated projections.
EhrhartResult ehrhart_formula(const Polytope& p);

/// Interior count polynomial sum_k (-1)^{d-k} Vol_k(pi^{d-k}(P)) m^k.
UniPoly interior_formula(const Polytope& p);

enum class Region { full, interior, omega };

/// Lattice points of mP (closed, open, or Omega) by scanning integer columns
/// of the bounding box and counting each exact fiber.
Integer brute_count(const Polytope& p, const Integer& m, Region region,
                    unsigned long long budget = kDefaultBudget);

/// Exact Lagrange fit through brute counts at m = 1..d+1; asserts i(P,0) = 1.
/// Requires integral vertices.
EhrhartResult interpolate_ehrhart(const Polytope& p, unsigned long long budget = kDefaultBudget);

/// Sum of count_omega over the pulling triangulation of a lattice-face polytope.
Integer count_omega_polytope(const Polytope& p);

/// |L(Omega(P))| == Vol(P) through both the signed g_d sum and a grid scan.
VerifyReport check_omega_volume(const Polytope& p, unsigned long long budget = kDefaultBudget);

/// i(P,-m) == (-1)^d * interior polynomial, plus the interior polynomial
/// against brute counts at m = 1..d+1 when affordable.
VerifyReport check_reciprocity(const Polytope& p, unsigned long long budget = kDefaultBudget);

}  // namespace lfp
