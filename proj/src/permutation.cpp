#include "lfp/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "lfp/errors.hpp"

namespace lfp {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int parity_sign(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string to_string(const Permutation& sigma) {
  std::string s;
  if (sigma.size() <= 9) {
    for (std::size_t v : sigma) s += static_cast<char>('1' + v);
    return s;
  }
  s = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sigma[i] + 1);
  }
  return s + ")";
}

Permutation parse_permutation(std::string_view text) {
  Permutation p;
  for (char c : text) {
    if (c < '1' || c > '9') throw DomainError("invalid permutation '" + std::string(text) + "'");
    p.push_back(static_cast<std::size_t>(c - '1'));
  }
  std::vector<std::size_t> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_permutation(p.size()))
    throw DomainError("invalid permutation '" + std::string(text) + "'");
  return p;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace lfp
