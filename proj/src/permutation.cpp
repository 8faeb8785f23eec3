#include "stdid/permutation.hpp"

#include <stdexcept>

namespace stdid {

bool is_permutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (const std::size_t x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::size_t inversion_count(std::span<const std::size_t> p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

int sgn_perm(std::span<const std::size_t> p) {
  if (!is_permutation(p)) throw std::invalid_argument("sgn_perm: not a permutation");
  // Parity from the cycle decomposition: k minus the number of cycles.
  std::vector<bool> visited(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = p[j]) visited[j] = true;
  }
  return ((p.size() - cycles) & 1U) != 0 ? -1 : 1;
}

Permutation inverse(std::span<const std::size_t> p) {
  if (!is_permutation(p)) throw std::invalid_argument("inverse: not a permutation");
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Permutation sigma_m(std::span<const std::size_t> sigma, std::span<const std::size_t> subset) {
  if (!is_permutation(sigma)) throw std::invalid_argument("sigma_m: sigma is not a permutation");
  for (std::size_t h = 0; h < subset.size(); ++h) {
    if (subset[h] >= sigma.size()) throw std::invalid_argument("sigma_m: subset is not inside the domain");
    if (h > 0 && subset[h - 1] >= subset[h]) throw std::invalid_argument("sigma_m: subset must be ascending");
  }
  Permutation result(subset.size(), 0);
  for (std::size_t g = 0; g < subset.size(); ++g) {
    for (std::size_t h = 0; h < subset.size(); ++h) {
      if (sigma[subset[h]] < sigma[subset[g]]) ++result[g];
    }
  }
  return result;
}

}  // namespace stdid
