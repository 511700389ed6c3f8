#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lfp {

/// One-line notation, zero-based: sigma[j] is the image of position j.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);

/// All n! permutations in lexicographic order (identity first).
std::vector<Permutation> all_permutations(std::size_t n);

/// +1 for even permutations, -1 for odd ones.
int parity_sign(const Permutation& sigma);

/// One-based digits, "231" for the zero-based {1,2,0}. Uses '(' ... ')'
/// with commas once n exceeds 9.
std::string to_string(const Permutation& sigma);

/// Inverse of to_string for n <= 9. Throws DomainError on bad input.
Permutation parse_permutation(std::string_view text);

std::size_t factorial(std::size_t n);

/// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace lfp
