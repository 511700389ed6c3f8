#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lfp/rational.hpp"

namespace lfp {

/// A point of R^d with exact coordinates.
using Point = std::vector<Rational>;

/// Builds a point from integer literals, mostly for tests and fixtures.
Point make_point(std::initializer_list<long> coords);

std::string to_string(const Point& p);

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return entries_; }

  RatMatrix transpose() const;
  RatMatrix without(std::size_t row, std::size_t col) const;
  void swap_rows(std::size_t a, std::size_t b);

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant. Rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
/// Throws DimensionError for non-square input.
Rational determinant(const RatMatrix& m);

/// Rank by exact Gaussian elimination.
std::size_t rank(const RatMatrix& m);

/// Solves a*x = b exactly for square nonsingular a. Throws DomainError
/// when a is singular.
std::vector<Rational> solve(const RatMatrix& a, std::vector<Rational> b);

/// The unique point lying in the affine span of `points` whose first k
/// coordinates equal `fixed_prefix`, where k + 1 == points.size().
/// Solved with Cramer's rule on the bordered (k+1)x(k+1) system.
/// Throws GeneralPositionError when the first-k projections of the points
/// are affinely dependent.
Point solve_affine(std::span<const Point> points, std::span<const Rational> fixed_prefix);

}  // namespace lfp
