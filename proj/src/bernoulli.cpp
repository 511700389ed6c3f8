#include "lfp/bernoulli.hpp"

namespace lfp {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<UniPoly> bernoulli_upto(unsigned k) {
  std::vector<UniPoly> b;
  b.reserve(k + 1);
  for (unsigned n = 0; n <= k; ++n) {
    UniPoly acc = UniPoly::monomial(n, Rational(static_cast<long>(n) + 1));
    for (unsigned j = 0; j < n; ++j) acc -= b[j] * Rational(binomial(n + 1, j));
    b.push_back(acc * Rational(1, static_cast<long>(n) + 1));
  }
  return b;
}

}  // namespace

UniPoly bernoulli_poly(unsigned k) { return bernoulli_upto(k).back(); }

Rational bernoulli_number(unsigned k) { return bernoulli_poly(k).coeff(0); }

UniPoly power_sum_poly(unsigned k) {
  const UniPoly b = bernoulli_poly(k + 1);
  UniPoly p = b.compose_linear(1, 1) - UniPoly::constant(b.coeff(0));
  return p * Rational(1, static_cast<long>(k) + 1);
}

PowerSumTable::PowerSumTable(unsigned max_k) : max_k_(max_k) {
  const auto b = bernoulli_upto(max_k + 1);
  for (unsigned k = 0; k <= max_k; ++k) {
    const UniPoly& bk = b[k + 1];
    polys_.push_back((bk.compose_linear(1, 1) - UniPoly::constant(bk.coeff(0))) * Rational(1, static_cast<long>(k) + 1));
  }
}

UniPoly PowerSumTable::get(unsigned k) const { return k <= max_k_ ? polys_[k] : power_sum_poly(k); }

const PowerSumTable& PowerSumTable::shared() {
  static const PowerSumTable table(24);
  return table;
}

Rational extended_sum(const UniPoly& h, const Rational& u) {
  const auto& t = PowerSumTable::shared();
  Rational out = h.coeff(0) * u;
  for (int k = 1; k <= h.degree(); ++k)
    if (!h.coeff(k).is_zero()) out += h.coeff(k) * t.get(k)(u);
  return out;
}

UniPoly extended_sum(const UniPoly& h, const UniPoly& u) {
  const auto& t = PowerSumTable::shared();
  UniPoly out = u * h.coeff(0);
  for (int k = 1; k <= h.degree(); ++k)
    if (!h.coeff(k).is_zero()) out += t.get(k).compose(u) * h.coeff(k);
  return out;
}

Rational f_d(std::span<const Rational> a) {
  if (a.empty()) throw DimensionError("f_d needs at least one argument");
  UniPoly f = UniPoly::constant(1);
  for (std::size_t j = a.size(); j-- > 0;) f = extended_sum(f, UniPoly::linear(a[j], 0));
  return f(1);
}

Rational g_d(std::span<const Rational> b) {
  if (b.empty()) throw DimensionError("g_d needs at least one argument");
  std::vector<Rational> a;
  Rational prev(1);
  for (const auto& x : b) {
    if (x.is_zero()) throw DomainError("g_d argument is zero");
    a.push_back(x / prev);
    prev = x;
  }
  return f_d(a);
}

Rational nbar(const Rational& x) { return x.sign() >= 0 ? x : -x - Rational(1); }

Integer nbar(const Integer& x) { return sgn(x) >= 0 ? Integer(x) : Integer(-x - 1); }

namespace {

struct NestedSum {
  std::span<const Rational> a;
  unsigned long long budget;
  unsigned long long steps = 0;

  Integer bound(std::size_t level, const Integer& prev) {
    return nbar((a[level] * Rational(prev)).floor());
  }

  Integer run(std::size_t level, const Integer& prev) {
    const Integer top = bound(level, prev);
    if (level + 1 == a.size()) {
      if (++steps > budget) throw BudgetExceeded("nested sum exceeded the enumeration budget");
      return top;
    }
    Integer total = 0;
    for (Integer s = 1; s <= top; ++s) {
      if (++steps > budget) throw BudgetExceeded("nested sum exceeded the enumeration budget");
      total += run(level + 1, s);
    }
    return total;
  }
};

}  // namespace

Integer nested_sum_signed(std::span<const Rational> a, unsigned long long budget) {
  if (a.empty()) throw DimensionError("nested sum needs at least one bound");
  NestedSum ns{a, budget};
  return ns.run(0, 1);
}

}  // namespace lfp
