#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lfp/errors.hpp"
#include "lfp/geometry.hpp"
#include "lfp/lattice_face.hpp"
#include "lfp/verify.hpp"

namespace lfp {

/// Everything attached to one signed cell S_sigma of a simplex.
struct CellDescriptor {
  Permutation sigma;
  int sign = 1;
  /// v_{sigma,0} .. v_{sigma,d}; the last one is the apex.
  std::vector<Point> chain;
  ZVector zvec;
  /// a(sigma,k) = z(sigma,k) / |z(sigma,k-1)|.
  std::vector<Rational> avec;
};

/// v_{sigma,k}: the point sharing its first k coordinates with the apex and
/// lying on the affine span of v_sigma(1..k+1).
std::vector<Point> chain_points(const Polytope& simplex, const Permutation& sigma);

/// sign(det X(sigma,d)) * sign(prod_k z(sigma,k)).
int cell_sign(const Polytope& simplex, const Permutation& sigma);

CellDescriptor describe_cell(const Polytope& simplex, const Permutation& sigma);

/// All d! cells, permutations in lexicographic order.
std::vector<CellDescriptor> decompose(const Polytope& simplex);

/// Membership predicate for S_sigma with the projected chain simplices built once.
class CellRegion {
 public:
  explicit CellRegion(const CellDescriptor& cell);
  bool contains(const Point& x) const;

 private:
  std::vector<Polytope> levels_;
};

bool cell_contains(const Point& x, const CellDescriptor& cell, const Polytope& simplex);

/// The two independent lattice-point counts of S_sigma.
struct CellCount {
  Integer enumerated;  // nested x-bar sum over a(sigma,k)
  Integer formula;     // sign(prod z) * g_d(z)
};

/// Both counts without comparing them. Requires a lattice-face simplex in
/// canonical order; integrality failures throw NotLatticeFaceError.
CellCount count_cell_methods(const Polytope& simplex, const Permutation& sigma,
                             unsigned long long budget = kDefaultBudget);

/// Common value of the two methods; disagreement throws InvariantFailure.
Integer count_cell(const Polytope& simplex, const Permutation& sigma, unsigned long long budget = kDefaultBudget);

/// |L(Omega(P))| as sum_sigma sign(sigma) g_d(z(sigma,.)). The vertex order is
/// canonicalized first.
Integer count_omega(const Polytope& simplex);

/// Grid box covering the simplex and every chain point.
GridBox decomposition_grid(const Polytope& simplex, const Integer& resolution = 1);

/// Pointwise check that the signed cell indicators add up to the indicator of Omega(P).
VerifyReport decomposition_multiset_check(const Polytope& simplex, const GridBox& grid,
                                          unsigned long long budget = kDefaultBudget);

/// sum_sigma sign(sigma) g_d(z) == det X(1,d) / d!.
VerifyReport identity_gsigma(const Polytope& simplex);

/// sum_sigma sign(sigma) prod zhat == (-1)^{d(d-1)/2} det Xhat(1,d), plus
/// zhat(sigma,k) == (-1)^k z(sigma,k) for every sigma and k.
VerifyReport identity_det2(const Polytope& simplex);

/// A function of z(sigma,1..ell).
using ZFunctional = std::function<Rational(std::span<const Rational>)>;

struct NamedFunctional {
  std::string name;
  ZFunctional fn;
};

/// Test family for ell leading z-values: constants, single coordinates,
/// squares and pairwise products.
std::vector<NamedFunctional> zero5_functionals(std::size_t ell);

/// sum_sigma sign(sigma) q(sigma) prod_{j>ell} z(sigma,j) / z(sigma,ell+1)^{k+1} == 0.
/// Requires ell + k <= d - 2.
VerifyReport identity_zero5(const Polytope& simplex, std::size_t ell, std::size_t k, const NamedFunctional& q);

/// identity_zero5 over every valid (ell,k) and every functional of the family.
VerifyReport identity_zero5_sweep(const Polytope& simplex);

}  // namespace lfp
