#include "lfp/poly.hpp"

#include <algorithm>
#include <utility>

namespace lfp {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& a, const Rational& b) { return UniPoly({b, a}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  return compose(UniPoly::linear(a, b));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& e : coeffs_) e *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& e : r.coeffs_) e = -e;
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const Rational& c = coeffs_[n];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const Rational mag = c.abs();
    if (n == 0) {
      s += mag.str();
      continue;
    }
    if (mag != Rational(1)) s += mag.str() + "*";
    s += var;
    if (n > 1) s += "^" + std::to_string(n);
  }
  return s;
}

}  // namespace lfp
