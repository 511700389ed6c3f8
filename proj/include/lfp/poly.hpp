#pragma once

#include <string>
#include <vector>

#include "lfp/rational.hpp"

namespace lfp {

/// Dense univariate polynomial with rational coefficients; coefficient i
/// multiplies x^i. The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(unsigned degree, const Rational& c = Rational(1));
  /// a*x + b
  static UniPoly linear(const Rational& a, const Rational& b);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  UniPoly compose(const UniPoly& inner) const;
  /// p(a*x + b)
  UniPoly compose_linear(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Human-readable form such as "40*m^3 + 12*m^2 + 4*m + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace lfp
