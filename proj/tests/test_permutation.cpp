#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "stdid/permutation.hpp"
#include "stdid/random.hpp"

using namespace stdid;

TEST_CASE("sgn_perm examples") {
  CHECK(sgn_perm(Permutation{}) == 1);
  CHECK(sgn_perm(Permutation{0, 1, 2}) == 1);
  CHECK(sgn_perm(Permutation{1, 0}) == -1);
  CHECK(sgn_perm(Permutation{1, 3, 0, 2}) == -1);
  CHECK(sgn_perm(Permutation{1, 2, 0}) == 1);
  CHECK(inversion_count(Permutation{1, 3, 0, 2}) == 3);
}

TEST_CASE("sgn_perm rejects non-permutations") {
  CHECK_THROWS_AS(sgn_perm(Permutation{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sgn_perm(Permutation{0, 2}), std::invalid_argument);
  CHECK(!is_permutation(Permutation{1, 1}));
  CHECK(is_permutation(Permutation{2, 0, 1}));
}

TEST_CASE("sgn_perm is a homomorphism and agrees with inversions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = draw_uniform(rng, 1, 9);
    const Permutation p = random_permutation(rng, k);
    const Permutation q = random_permutation(rng, k);
    Permutation pq(k);
    for (std::size_t i = 0; i < k; ++i) pq[i] = p[q[i]];
    CHECK(sgn_perm(pq) == sgn_perm(p) * sgn_perm(q));
    CHECK(sgn_perm(p) == oracle::inversion_sign(p));
    CHECK(sgn_perm(inverse(p)) == sgn_perm(p));
    const Permutation pi = inverse(p);
    for (std::size_t i = 0; i < k; ++i) CHECK(pi[p[i]] == i);
  }
}

TEST_CASE("sigma_m relative order") {
  CHECK(sigma_m(Permutation{1, 3, 0, 2}, std::vector<std::size_t>{1, 3}) == Permutation{1, 0});
  CHECK(sigma_m(Permutation{1, 3, 0, 2}, std::vector<std::size_t>{0, 2}) == Permutation{1, 0});
  CHECK(sigma_m(Permutation{1, 3, 0, 2}, std::vector<std::size_t>{}).empty());
  CHECK(sigma_m(Permutation{2, 0, 1}, std::vector<std::size_t>{0, 1, 2}) == Permutation{2, 0, 1});
  CHECK_THROWS_AS(sigma_m(Permutation{0, 1, 2}, std::vector<std::size_t>{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sigma_m(Permutation{0, 1, 2}, std::vector<std::size_t>{3}), std::invalid_argument);
}

TEST_CASE("sigma_m is a permutation of its subset size") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = draw_uniform(rng, 1, 9);
    const Permutation p = random_permutation(rng, k);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (draw_uniform(rng, 0, 1) == 1) subset.push_back(i);
    }
    const Permutation r = sigma_m(p, subset);
    CHECK(r.size() == subset.size());
    CHECK(is_permutation(r));
    std::vector<std::size_t> images;
    for (const std::size_t j : subset) images.push_back(p[j]);
    CHECK(sgn_perm(r) == oracle::inversion_sign(images));
  }
}
