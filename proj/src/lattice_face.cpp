#include "lfp/lattice_face.hpp"

#include "lfp/errors.hpp"

namespace lfp {

std::string LatticeFaceWitness::describe() const {
  std::string u = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) u += ",";
    u += "v" + std::to_string(subset[i] + 1);
  }
  u += "}";
  if (kind == Kind::general_position)
    return "U=" + u + " is affinely dependent after keeping the first " + std::to_string(level) +
           " coordinates (general position fails)";
  if (level == 0)
    return "U=" + u + ": coordinate x" + std::to_string(coordinate + 1) + " = " + value.str() + " is not an integer";
  const std::string term = variable ? "coefficient of x" + std::to_string(*variable + 1) : std::string("constant term");
  return "U=" + u + ": on its affine span x" + std::to_string(coordinate + 1) + " has " + term + " " + value.str() +
         ", so the lattice of the span does not project onto Z^" + std::to_string(level);
}

LatticeFaceVerdict is_lattice_face(const Polytope& p) {
  LatticeFaceVerdict out;
  out.general_position = general_position_check(p);
  const std::size_t d = p.dim();
  // Top level first, as in the recursive definition; within a level the
  // first subset in lexicographic order that fails either condition wins.
  for (std::size_t k = d; k-- > 0;) {
    for (const auto& u : subsets(p.size(), k + 1)) {
      std::vector<Point> pts;
      for (std::size_t i : u) pts.push_back(p.vertex(i));
      std::vector<Rational> prefix(k);
      Point base;
      try {
        base = solve_affine(pts, prefix);
      } catch (const GeneralPositionError&) {
        out.witness = LatticeFaceWitness{LatticeFaceWitness::Kind::general_position, k, u, 0, std::nullopt, Rational()};
        return out;
      }
      auto fail = [&](std::size_t coord, std::optional<std::size_t> var, const Rational& v) {
        out.witness = LatticeFaceWitness{LatticeFaceWitness::Kind::non_integral, k, u, coord, var, v};
        return out;
      };
      for (std::size_t j = k; j < d; ++j)
        if (!base[j].is_integer()) return fail(j, std::nullopt, base[j]);
      for (std::size_t i = 0; i < k; ++i) {
        prefix.assign(k, Rational(0));
        prefix[i] = 1;
        const Point w = solve_affine(pts, prefix);
        for (std::size_t j = k; j < d; ++j) {
          const Rational a = w[j] - base[j];
          if (!a.is_integer()) return fail(j, i, a);
        }
      }
    }
  }
  if (!out.general_position.ok) throw InvariantFailure("general position failed but every subset passed");
  out.lattice_face = true;
  return out;
}

ZVector z_values(const Polytope& s, const Permutation& sigma) {
  if (!s.is_simplex()) throw DimensionError("z_values needs a simplex");
  if (sigma.size() != s.dim()) throw DimensionError("permutation size must equal the dimension");
  ZVector zv{sigma, {}};
  for (std::size_t k = 1; k <= s.dim(); ++k) {
    const Rational y = determinant(y_matrix(s, sigma, k));
    if (y.is_zero()) throw GeneralPositionError("vanishing det Y(" + to_string(sigma) + "," + std::to_string(k) + ")");
    zv.values.push_back(determinant(x_matrix(s, sigma, k)) / y);
  }
  return zv;
}

bool ratio_integrality(const ZVector& zv) {
  Rational prev(1);
  for (const auto& z : zv.values) {
    if (prev.is_zero()) return false;
    if (!(z / prev).is_integer()) return false;
    prev = z;
  }
  return true;
}

Point AffineTransform::apply(const Point& x) const {
  const std::size_t d = translation.size();
  Point y = translation;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      if (!matrix(j, k).is_zero()) y[k] += x[j] * matrix(j, k);
  return y;
}

Point AffineTransform::apply_inverse(const Point& y) const {
  const std::size_t d = translation.size();
  Point x(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational v = y[k] - translation[k];
    for (std::size_t j = 0; j < k; ++j) v -= x[j] * matrix(j, k);
    x[k] = v / matrix(k, k);
  }
  return x;
}

bool AffineTransform::is_integral() const {
  for (const auto& t : translation)
    if (!t.is_integer()) return false;
  for (const auto& e : matrix.entries())
    if (!e.is_integer()) return false;
  return true;
}

AffineTransform t_sigma(const Polytope& s, const Permutation& sigma, bool claimed_lattice_face) {
  if (!s.is_simplex()) throw DimensionError("t_sigma needs a simplex");
  const std::size_t d = s.dim();
  AffineTransform t{std::vector<Rational>(d), RatMatrix(d, d)};
  for (std::size_t k = 1; k <= d; ++k) {
    const Rational y = determinant(y_matrix(s, sigma, k));
    if (y.is_zero()) throw GeneralPositionError("vanishing det Y(" + to_string(sigma) + "," + std::to_string(k) + ")");
    const RatMatrix x = x_matrix(s, sigma, k);
    // Minor m(sigma,k;j): drop the last row and column j of Xtilde.
    const Rational m0 = determinant(x.without(k, 0));
    t.translation[k - 1] = (k % 2 == 0 ? m0 : -m0) / y;
    for (std::size_t j = 1; j < k; ++j) {
      const Rational mj = determinant(x.without(k, j)) / y;
      t.matrix(j - 1, k - 1) = ((k + j) % 2 == 0) ? mj : -mj;
    }
    t.matrix(k - 1, k - 1) = 1;
  }
  if (claimed_lattice_face && !t.is_integral())
    throw NotLatticeFaceError("T_" + to_string(sigma) + " has non-integral entries");
  return t;
}

namespace {

bool canonical_dets(const std::vector<Point>& v) {
  const std::size_t d = v.size() - 1;
  RatMatrix x(d + 1, d + 1), y(d, d);
  for (std::size_t r = 0; r <= d; ++r) {
    x(r, 0) = 1;
    for (std::size_t c = 0; c < d; ++c) x(r, c + 1) = v[r][c];
  }
  for (std::size_t r = 0; r < d; ++r) {
    y(r, 0) = 1;
    for (std::size_t c = 0; c + 1 < d; ++c) y(r, c + 1) = v[r][c];
  }
  return determinant(x).sign() > 0 && determinant(y).sign() > 0;
}

}  // namespace

bool is_canonical_order(const Polytope& s) {
  if (!s.is_simplex()) throw DimensionError("vertex order conditions need a simplex");
  return canonical_dets(s.vertices());
}

Polytope canonical_order(const Polytope& s, std::vector<std::size_t>* order_out) {
  if (!s.is_simplex()) throw DimensionError("canonical_order needs a simplex");
  for (const auto& order : all_permutations(s.size())) {
    std::vector<Point> v;
    for (std::size_t i : order) v.push_back(s.vertex(i));
    if (canonical_dets(v)) {
      if (order_out) *order_out = order;
      return Polytope(s.dim(), std::move(v));
    }
  }
  throw GeneralPositionError("no vertex order makes det X(1,d) and det Y(1,d) positive");
}

Polytope shear(const Polytope& p, const RatMatrix& m, const Point& t) {
  const std::size_t d = p.dim();
  if (m.rows() != d || m.cols() != d || t.size() != d) throw DimensionError("shear shape mismatch");
  std::vector<Point> vs;
  for (const auto& x : p.vertices()) {
    Point y = t;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) y[k] += x[j] * m(j, k);
    vs.push_back(std::move(y));
  }
  return Polytope(d, std::move(vs));
}

}  // namespace lfp
