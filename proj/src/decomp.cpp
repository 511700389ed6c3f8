#include "lfp/decomp.hpp"

#include "lfp/bernoulli.hpp"

namespace lfp {

namespace {

void require_simplex(const Polytope& s) {
  if (!s.is_simplex()) throw DimensionError("expected a simplex (d+1 vertices); triangulate first");
}

Point prefix(const Point& x, std::size_t k) { return Point(x.begin(), x.begin() + static_cast<long>(k)); }

}  // namespace

std::vector<Point> chain_points(const Polytope& s, const Permutation& sigma) {
  require_simplex(s);
  const std::size_t d = s.dim();
  if (sigma.size() != d) throw DimensionError("permutation size must equal the dimension");
  const Point& apex = s.vertex(d);
  std::vector<Point> chain;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Point> span_pts;
    for (std::size_t j = 0; j <= k; ++j) span_pts.push_back(s.vertex(sigma[j]));
    const Point head = prefix(apex, k);
    chain.push_back(solve_affine(span_pts, head));
  }
  chain.push_back(apex);
  return chain;
}

int cell_sign(const Polytope& s, const Permutation& sigma) {
  const ZVector zv = z_values(s, sigma);
  int sg = determinant(x_matrix(s, sigma, s.dim())).sign();
  for (const auto& z : zv.values) {
    if (z.is_zero()) throw GeneralPositionError("z(" + to_string(sigma) + ",k) vanishes");
    sg *= z.sign();
  }
  return sg;
}

CellDescriptor describe_cell(const Polytope& s, const Permutation& sigma) {
  CellDescriptor c;
  c.sigma = sigma;
  c.chain = chain_points(s, sigma);
  c.zvec = z_values(s, sigma);
  c.sign = cell_sign(s, sigma);
  Rational prev(1);
  for (const auto& z : c.zvec.values) {
    c.avec.push_back(z / prev.abs());
    prev = z;
  }
  return c;
}

std::vector<CellDescriptor> decompose(const Polytope& s) {
  require_simplex(s);
  std::vector<CellDescriptor> out;
  for (const auto& sigma : all_permutations(s.dim())) out.push_back(describe_cell(s, sigma));
  return out;
}

CellRegion::CellRegion(const CellDescriptor& cell) {
  const std::size_t d = cell.chain.size() - 1;
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<Point> pts;
    for (std::size_t j = 0; j <= k; ++j) pts.push_back(prefix(cell.chain[j], k));
    levels_.emplace_back(k, std::move(pts));
  }
}

bool CellRegion::contains(const Point& x) const {
  for (const auto& level : levels_)
    if (!omega_contains(prefix(x, level.dim()), level)) return false;
  return true;
}

bool cell_contains(const Point& x, const CellDescriptor& cell, const Polytope& s) {
  if (x.size() != s.dim()) throw DimensionError("point dimension mismatch");
  return CellRegion(cell).contains(x);
}

CellCount count_cell_methods(const Polytope& s, const Permutation& sigma, unsigned long long budget) {
  require_simplex(s);
  if (!is_canonical_order(s)) throw DomainError("cell counts need the canonical vertex order");
  const ZVector zv = z_values(s, sigma);
  if (!ratio_integrality(zv))
    throw NotLatticeFaceError("z(" + to_string(sigma) + ",k)/z(" + to_string(sigma) + ",k-1) is not an integer");
  std::vector<Rational> a;
  Rational prev(1);
  int sg = 1;
  for (const auto& z : zv.values) {
    a.push_back(z / prev.abs());
    prev = z;
    sg *= z.sign();
  }
  CellCount out;
  out.enumerated = nested_sum_signed(a, budget);
  const Rational g = g_d(zv.values) * Rational(sg);
  if (!g.is_integer()) throw InvariantFailure("g_d value for a lattice-face cell is not an integer: " + g.str());
  out.formula = g.numerator();
  return out;
}

Integer count_cell(const Polytope& s, const Permutation& sigma, unsigned long long budget) {
  const CellCount c = count_cell_methods(s, sigma, budget);
  if (c.enumerated != c.formula)
    throw InvariantFailure("cell " + to_string(sigma) + ": enumeration gives " + to_string(c.enumerated) +
                           ", g_d formula gives " + to_string(c.formula));
  return c.formula;
}

Integer count_omega(const Polytope& simplex) {
  require_simplex(simplex);
  const Polytope s = is_canonical_order(simplex) ? simplex : canonical_order(simplex);
  Rational total;
  for (const auto& sigma : all_permutations(s.dim())) {
    const ZVector zv = z_values(s, sigma);
    if (!ratio_integrality(zv))
      throw NotLatticeFaceError("z(" + to_string(sigma) + ",k)/z(" + to_string(sigma) + ",k-1) is not an integer");
    total += Rational(parity_sign(sigma)) * g_d(zv.values);
  }
  if (!total.is_integer()) throw InvariantFailure("signed g_d sum is not an integer: " + total.str());
  return total.numerator();
}

GridBox decomposition_grid(const Polytope& s, const Integer& resolution) {
  require_simplex(s);
  std::vector<Point> pts = s.vertices();
  for (const auto& sigma : all_permutations(s.dim()))
    for (auto& c : chain_points(s, sigma)) pts.push_back(std::move(c));
  return bounding_box(pts, resolution);
}

VerifyReport decomposition_multiset_check(const Polytope& s, const GridBox& grid, unsigned long long budget) {
  require_simplex(s);
  VerifyReport rep;
  rep.check = "fdecomp";
  const auto cells = decompose(s);
  std::vector<CellRegion> regions;
  for (const auto& c : cells) regions.emplace_back(c);
  unsigned long long points = 0, in_omega = 0;
  long long signed_total = 0;
  for_each_grid_point(grid, budget, [&](const Point& x) {
    ++points;
    int lhs = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (regions[i].contains(x)) lhs += cells[i].sign;
    const int rhs = omega_contains(x, s) ? 1 : 0;
    in_omega += static_cast<unsigned long long>(rhs);
    signed_total += lhs;
    if (lhs != rhs && rep.violations.size() < 20)
      rep.violations.push_back("at " + to_string(x) + ": signed cell sum " + std::to_string(lhs) +
                               ", Omega indicator " + std::to_string(rhs));
  });
  rep.cases = 1;
  rep.values.emplace_back("grid_points", Rational(points));
  rep.values.emplace_back("omega_points", Rational(in_omega));
  rep.values.emplace_back("signed_cell_points", Rational(static_cast<long long>(signed_total)));
  return rep;
}

}  // namespace lfp
