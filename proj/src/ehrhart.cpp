#include "lfp/ehrhart.hpp"

#include "lfp/decomp.hpp"
#include "lfp/lattice_face.hpp"

namespace lfp {

namespace {

void require_lattice_face(const Polytope& p) {
  const LatticeFaceVerdict v = is_lattice_face(p);
  if (!v.lattice_face) throw NotLatticeFaceError("not a lattice-face polytope: " + v.witness->describe());
}

// Vol_k(pi^{d-k}(P)) for k = 0..d.
std::vector<Rational> level_volumes(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<Rational> vols(d + 1);
  vols[0] = 1;
  vols[d] = volume(p);
  for (std::size_t k = 1; k < d; ++k) vols[k] = volume(project(p, d - k));
  return vols;
}

struct Column {
  std::optional<Rational> lo, hi;
  bool empty = false;
  bool on_vertical_facet = false;
};

Column column(const Polytope& p, const Point& y) {
  const std::size_t d = p.dim();
  Column c;
  for (const auto& f : p.facets()) {
    Rational rest = f.offset;
    for (std::size_t i = 0; i + 1 < d; ++i) rest -= f.normal[i] * y[i];
    const Rational& nd = f.normal[d - 1];
    if (nd.is_zero()) {
      if (rest.sign() < 0) c.empty = true;
      if (rest.is_zero()) c.on_vertical_facet = true;
      continue;
    }
    const Rational b = rest / nd;
    if (nd.sign() > 0) {
      if (!c.hi || b < *c.hi) c.hi = b;
    } else if (!c.lo || b > *c.lo) {
      c.lo = b;
    }
  }
  if (!c.lo || !c.hi || *c.lo > *c.hi) c.empty = true;
  return c;
}

Integer column_count(const Column& c, Region region) {
  if (c.empty) return 0;
  Integer n;
  switch (region) {
    case Region::full: n = c.hi->floor() - c.lo->ceil() + 1; break;
    case Region::interior:
      if (c.on_vertical_facet) return 0;
      n = c.hi->ceil() - c.lo->floor() - 1;
      break;
    case Region::omega: n = c.hi->floor() - c.lo->floor(); break;
  }
  return sgn(n) > 0 ? n : Integer(0);
}

}  // namespace

EhrhartResult ehrhart_formula(const Polytope& p) {
  require_lattice_face(p);
  EhrhartResult r;
  r.method = EhrhartMethod::formula;
  r.per_level_volumes = level_volumes(p);
  r.poly = UniPoly(r.per_level_volumes);
  const std::size_t d = p.dim();
  for (std::size_t k = 1; k <= d; ++k) {
    const Polytope level = k == d ? p : project(p, d - k);
    const Integer omega = count_omega_polytope(level);
    if (Rational(omega) != r.per_level_volumes[k])
      throw InvariantFailure("level " + std::to_string(k) + ": Omega count " + to_string(omega) + " differs from volume " +
                             r.per_level_volumes[k].str());
  }
  return r;
}

UniPoly interior_formula(const Polytope& p) {
  const EhrhartResult r = ehrhart_formula(p);
  std::vector<Rational> c = r.per_level_volumes;
  const std::size_t d = p.dim();
  for (std::size_t k = 0; k <= d; ++k)
    if ((d - k) % 2 == 1) c[k] = -c[k];
  return UniPoly(c);
}

Integer brute_count(const Polytope& p, const Integer& m, Region region, unsigned long long budget) {
  if (sgn(m) <= 0) throw DomainError("dilation factor must be a positive integer");
  const Polytope q = p.dilate(Rational(m));
  const std::size_t d = q.dim();
  if (d == 1) return column_count(column(q, Point{}), region);
  std::vector<Point> base;
  for (const auto& v : q.vertices()) base.push_back(drop_last(v, 1));
  Integer total = 0;
  for_each_grid_point(bounding_box(base, 1), budget, [&](const Point& y) { total += column_count(column(q, y), region); });
  return total;
}

EhrhartResult interpolate_ehrhart(const Polytope& p, unsigned long long budget) {
  for (const auto& v : p.vertices())
    for (const auto& c : v)
      if (!c.is_integer()) throw DomainError("interpolation needs integral vertices");
  const std::size_t d = p.dim();
  std::vector<Rational> xs, ys;
  for (std::size_t m = 1; m <= d + 1; ++m) {
    xs.emplace_back(static_cast<long>(m));
    ys.emplace_back(brute_count(p, Integer(static_cast<long>(m)), Region::full, budget));
  }
  UniPoly fit;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) basis = basis * UniPoly::linear(Rational(1) / (xs[i] - xs[j]), -xs[j] / (xs[i] - xs[j]));
    fit += basis;
  }
  if (fit(0) != Rational(1)) throw InvariantFailure("interpolated polynomial has i(P,0) = " + fit(0).str());
  return EhrhartResult{fit, {}, EhrhartMethod::interpolation};
}

Integer count_omega_polytope(const Polytope& p) {
  Integer total = 0;
  for (const auto& s : triangulate(p)) total += count_omega(s);
  return total;
}

VerifyReport check_omega_volume(const Polytope& p, unsigned long long budget) {
  VerifyReport rep;
  rep.check = "main2";
  rep.cases = 1;
  const Rational vol = volume(p);
  const Integer formula = count_omega_polytope(p);
  const Integer scanned = brute_count(p, 1, Region::omega, budget);
  rep.values = {{"volume", vol}, {"omega_formula", Rational(formula)}, {"omega_scan", Rational(scanned)}};
  if (Rational(formula) != vol)
    rep.violations.push_back("signed g_d count " + to_string(formula) + " != volume " + vol.str());
  if (Rational(scanned) != vol)
    rep.violations.push_back("grid-scanned Omega count " + to_string(scanned) + " != volume " + vol.str());
  return rep;
}

VerifyReport check_reciprocity(const Polytope& p, unsigned long long budget) {
  VerifyReport rep;
  rep.check = "reciprocity";
  rep.cases = 1;
  const std::size_t d = p.dim();
  const UniPoly full = ehrhart_formula(p).poly;
  const UniPoly inner = interior_formula(p);
  const UniPoly reflected = full.compose_linear(-1, 0);
  const UniPoly expected = (d % 2 == 0) ? inner : -inner;
  if (!(reflected == expected))
    rep.violations.push_back("i(P,-m) = " + reflected.str("m") + " but (-1)^d interior = " + expected.str("m"));
  for (std::size_t m = 1; m <= d + 1; ++m) {
    Integer scanned;
    try {
      scanned = brute_count(p, Integer(static_cast<long>(m)), Region::interior, budget);
    } catch (const BudgetExceeded&) {
      break;
    }
    const Rational predicted = inner(Rational(static_cast<long>(m)));
    if (Rational(scanned) != predicted)
      rep.violations.push_back("interior count at m=" + std::to_string(m) + " is " + to_string(scanned) +
                               ", polynomial gives " + predicted.str());
  }
  return rep;
}

}  // namespace lfp
