#pragma once

#include <span>
#include <vector>

#include "lfp/errors.hpp"
#include "lfp/poly.hpp"
#include "lfp/rational.hpp"

namespace lfp {

/// B_k(x) from sum_{j<=k} C(k+1,j) B_j(x) = (k+1) x^k.
UniPoly bernoulli_poly(unsigned k);

/// B_k = B_k(0).
Rational bernoulli_number(unsigned k);

/// P_k(x) = (B_{k+1}(x+1) - B_{k+1}) / (k+1); P_k(n) = 1^k + ... + n^k.
UniPoly power_sum_poly(unsigned k);

/// P_0..P_max_k, built once.
class PowerSumTable {
 public:
  explicit PowerSumTable(unsigned max_k);

  unsigned max_k() const { return max_k_; }
  /// Falls back to a fresh computation above max_k.
  UniPoly get(unsigned k) const;
  const std::vector<UniPoly>& polys() const { return polys_; }

  /// Process-wide read-only table covering the degrees used in practice.
  static const PowerSumTable& shared();

 private:
  unsigned max_k_;
  std::vector<UniPoly> polys_;
};

/// Sum_{s=1}^{u} h(s) extended to every u by h_0 u + sum_k h_k P_k(u).
Rational extended_sum(const UniPoly& h, const Rational& u);
/// Same rule with a polynomial upper bound; returns a polynomial.
UniPoly extended_sum(const UniPoly& h, const UniPoly& u);

/// f_d(a_1..a_d) = sum_{s_1=1}^{a_1} sum_{s_2=1}^{a_2 s_1} ... 1 on the
/// extended domain.
Rational f_d(std::span<const Rational> a);

/// g_d(b) = f_d(b_1/b_0, b_2/b_1, ..., b_d/b_{d-1}) with b_0 = 1. Throws
/// DomainError on a zero argument.
Rational g_d(std::span<const Rational> b);

/// x if x >= 0, otherwise -x-1.
Rational nbar(const Rational& x);
Integer nbar(const Integer& x);

/// Literal enumeration sum_{s_1=1}^{nbar(floor a_1)} sum_{s_2=1}^{nbar(floor(a_2 s_1))} ... 1
/// with every s treated as positive. Throws BudgetExceeded when more than
/// `budget` loop steps would be needed.
Integer nested_sum_signed(std::span<const Rational> a, unsigned long long budget = kDefaultBudget);

}  // namespace lfp
