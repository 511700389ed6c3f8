#include "lfp/matrix.hpp"

#include <utility>

#include "lfp/errors.hpp"

namespace lfp {

Point make_point(std::initializer_list<long> coords) {
  Point p;
  p.reserve(coords.size());
  for (long c : coords) p.emplace_back(c);
  return p;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionError("matrix entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::without(std::size_t row, std::size_t col) const {
  RatMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, cj = 0; j < cols_; ++j) {
      if (j == col) continue;
      m(ri, cj++) = (*this)(i, j);
    }
    ++ri;
  }
  return m;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row; det(m) = det(a) / prod(scale).
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer den = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = m(i, j);
      a[i * n + j] = e.numerator() * (l / e.denominator());
    }
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& e = a[i * n + j];
        e = a[k * n + k] * e - a[i * n + k] * a[k * n + j];
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  Integer det = a[n * n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(const RatMatrix& m, std::vector<Rational> b) {
  if (!m.square() || b.size() != m.rows()) throw DimensionError("solve needs a square system");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw DomainError("singular linear system");
    a.swap_rows(p, c);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

Point solve_affine(std::span<const Point> points, std::span<const Rational> fixed_prefix) {
  const std::size_t k = fixed_prefix.size();
  if (points.size() != k + 1) throw DimensionError("solve_affine needs exactly prefix length + 1 points");
  const std::size_t d = points.front().size();
  if (k > d) throw DimensionError("prefix longer than the ambient dimension");
  for (const Point& p : points)
    if (p.size() != d) throw DimensionError("points of mixed dimension");

  // Unknown barycentric weights w: sum w_i = 1, sum w_i p_i[j] = prefix[j].
  RatMatrix a(k + 1, k + 1);
  std::vector<Rational> rhs(k + 1);
  for (std::size_t i = 0; i <= k; ++i) a(0, i) = 1;
  rhs[0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i <= k; ++i) a(j + 1, i) = points[i][j];
    rhs[j + 1] = fixed_prefix[j];
  }
  const Rational det = determinant(a);
  if (det.is_zero()) throw GeneralPositionError("projected points are affinely dependent");

  Point w(d);
  for (std::size_t i = 0; i <= k; ++i) {
    RatMatrix ai = a;
    for (std::size_t r = 0; r <= k; ++r) ai(r, i) = rhs[r];
    const Rational weight = determinant(ai) / det;
    if (weight.is_zero()) continue;
    for (std::size_t c = 0; c < d; ++c) w[c] += weight * points[i][c];
  }
  return w;
}

}  // namespace lfp
