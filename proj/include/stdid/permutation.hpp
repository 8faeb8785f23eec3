#ifndef STDID_PERMUTATION_HPP
#define STDID_PERMUTATION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace stdid {

/// A permutation of {0, ..., k-1} stored as its sequence of images.
using Permutation = std::vector<std::size_t>;

bool is_permutation(std::span<const std::size_t> p);

/// Number of pairs i < j with p[i] > p[j]; O(k^2).
std::size_t inversion_count(std::span<const std::size_t> p);

/// +1 or -1. Throws std::invalid_argument unless p is a bijection.
int sgn_perm(std::span<const std::size_t> p);

Permutation inverse(std::span<const std::size_t> p);

/// Relative-order permutation of sigma on the ascending subset M = {j_1 < ... < j_m}:
///   result[g] = #{h : sigma[j_h] < sigma[j_g]}   (0-based ranks).
/// Throws std::invalid_argument when M is not an ascending subset of the domain.
Permutation sigma_m(std::span<const std::size_t> sigma, std::span<const std::size_t> subset);

}  // namespace stdid

#endif  // STDID_PERMUTATION_HPP
