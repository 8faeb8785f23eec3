#ifndef STDID_RANDOM_HPP
#define STDID_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace stdid {

/// Uniform integer in [lo, hi] by rejection. Used instead of the standard
/// distributions so seeded runs agree across library implementations.
inline std::size_t draw_uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::size_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::size_t>(x % span);
}

/// Uniformly random permutation of {0, ..., k-1} (Fisher-Yates).
inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = k; i > 1; --i) std::swap(p[i - 1], p[draw_uniform(rng, 0, i - 1)]);
  return p;
}

}  // namespace stdid

#endif  // STDID_RANDOM_HPP
