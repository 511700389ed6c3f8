#include "lfp/bernoulli.hpp"
#include "lfp/decomp.hpp"

namespace lfp {

namespace {

void require_simplex(const Polytope& s) {
  if (!s.is_simplex()) throw DimensionError("identity checks need a simplex");
}

std::string eq_failure(const std::string& what, const Rational& lhs, const Rational& rhs) {
  return what + ": left side " + lhs.str() + " != right side " + rhs.str();
}

}  // namespace

VerifyReport identity_gsigma(const Polytope& s) {
  require_simplex(s);
  const std::size_t d = s.dim();
  Rational lhs;
  for (const auto& sigma : all_permutations(d))
    lhs += Rational(parity_sign(sigma)) * g_d(z_values(s, sigma).values);
  const Rational rhs = determinant(x_matrix(s, identity_permutation(d), d)) / Rational(factorial(d));
  VerifyReport rep{"gsigma", 1, {{"lhs", lhs}, {"rhs", rhs}}, {}};
  if (lhs != rhs) rep.violations.push_back(eq_failure("signed g_d sum vs det X(1,d)/d!", lhs, rhs));
  return rep;
}

VerifyReport identity_det2(const Polytope& s) {
  require_simplex(s);
  const std::size_t d = s.dim();
  VerifyReport rep;
  rep.check = "det2";
  rep.cases = 1;
  Rational lhs;
  for (const auto& sigma : all_permutations(d)) {
    const ZVector zv = z_values(s, sigma);
    Rational prod(1);
    for (std::size_t k = 1; k <= d; ++k) {
      const Rational yh = determinant(yhat_matrix(s, sigma, k));
      if (yh.is_zero()) throw GeneralPositionError("vanishing det Yhat");
      const Rational zh = determinant(xhat_matrix(s, sigma, k)) / yh;
      const Rational expect = (k % 2 == 0) ? zv.values[k - 1] : -zv.values[k - 1];
      if (zh != expect)
        rep.violations.push_back(eq_failure("zhat(" + to_string(sigma) + "," + std::to_string(k) + ") vs (-1)^k z", zh, expect));
      prod *= zh;
    }
    lhs += Rational(parity_sign(sigma)) * prod;
  }
  Rational rhs = determinant(xhat_matrix(s, identity_permutation(d), d));
  if ((d * (d - 1) / 2) % 2 == 1) rhs = -rhs;
  rep.values = {{"lhs", lhs}, {"rhs", rhs}};
  if (lhs != rhs) rep.violations.push_back(eq_failure("signed zhat product sum", lhs, rhs));
  return rep;
}

std::vector<NamedFunctional> zero5_functionals(std::size_t ell) {
  std::vector<NamedFunctional> out;
  out.push_back({"1", [](std::span<const Rational>) { return Rational(1); }});
  out.push_back({"-7/3", [](std::span<const Rational>) { return Rational(-7, 3); }});
  for (std::size_t i = 0; i < ell; ++i) {
    const std::string zi = "z" + std::to_string(i + 1);
    out.push_back({zi, [i](std::span<const Rational> z) { return z[i]; }});
    out.push_back({zi + "^2", [i](std::span<const Rational> z) { return z[i] * z[i]; }});
    for (std::size_t j = i + 1; j < ell; ++j)
      out.push_back({zi + "*z" + std::to_string(j + 1), [i, j](std::span<const Rational> z) { return z[i] * z[j]; }});
  }
  if (ell > 0)
    out.push_back({"1/(1+z1^2)", [](std::span<const Rational> z) { return Rational(1) / (Rational(1) + z[0] * z[0]); }});
  return out;
}

VerifyReport identity_zero5(const Polytope& s, std::size_t ell, std::size_t k, const NamedFunctional& q) {
  require_simplex(s);
  const std::size_t d = s.dim();
  if (d < 2 || ell + k > d - 2) throw DomainError("zero5 needs ell + k <= d - 2");
  Rational total;
  for (const auto& sigma : all_permutations(d)) {
    const auto z = z_values(s, sigma).values;
    Rational term = q.fn(std::span<const Rational>(z.data(), ell));
    for (std::size_t j = ell; j < d; ++j) term *= z[j];
    term /= pow(z[ell], static_cast<unsigned>(k + 1));
    total += Rational(parity_sign(sigma)) * term;
  }
  VerifyReport rep;
  rep.check = "zero5";
  rep.cases = 1;
  const std::string tag = "ell=" + std::to_string(ell) + ",k=" + std::to_string(k) + ",q=" + q.name;
  rep.values.emplace_back(tag, total);
  if (!total.is_zero()) rep.violations.push_back(tag + ": sum is " + total.str() + ", expected 0");
  return rep;
}

VerifyReport identity_zero5_sweep(const Polytope& s) {
  VerifyReport rep;
  rep.check = "zero5";
  if (s.dim() < 2) return rep;
  for (std::size_t ell = 0; ell + 2 <= s.dim(); ++ell)
    for (std::size_t k = 0; ell + k + 2 <= s.dim(); ++k)
      for (const auto& q : zero5_functionals(ell)) {
        const VerifyReport one = identity_zero5(s, ell, k, q);
        rep.cases += one.cases;
        for (const auto& v : one.violations) rep.violations.push_back(v);
      }
  return rep;
}

}  // namespace lfp
