// Brute-force reference computations for tests. Nothing here shares code
// paths with the search kernel or the prefix-product evaluator.
#ifndef STDID_TESTS_ORACLE_HPP
#define STDID_TESTS_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "stdid/digraph.hpp"
#include "stdid/grassmann.hpp"
#include "stdid/integer.hpp"

namespace oracle {

inline int inversion_sign(const std::vector<std::size_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

struct TrailSum {
  stdid::Integer signed_sum;
  std::size_t trails = 0;
};

// Every permutation of the edges is tested for being an Eulerian trail; the
// marked factor is the inversion sign of the marked edges in trail order.
inline TrailSum brute_force_sum(const stdid::MarkedDigraph& g) {
  std::vector<std::size_t> sigma(g.edge_count());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  TrailSum out;
  do {
    stdid::Vertex head = g.start();
    bool ok = true;
    for (const std::size_t e : sigma) {
      if (g.edge(e).source != head) {
        ok = false;
        break;
      }
      head = g.edge(e).target;
    }
    if (!ok || head != g.end()) continue;
    std::vector<std::size_t> marked_in_order;
    for (const std::size_t e : sigma) {
      if (g.edge(e).marked) marked_in_order.push_back(e);
    }
    out.signed_sum += inversion_sign(sigma) * inversion_sign(marked_in_order);
    ++out.trails;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// s_k by the defining sum with full products for every permutation.
inline stdid::GrassmannMatrix naive_standard_polynomial(const std::vector<stdid::GrassmannMatrix>& xs) {
  std::vector<std::size_t> pi(xs.size());
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  stdid::GrassmannMatrix total(xs.front().size(), xs.front().generators());
  do {
    stdid::GrassmannMatrix product = xs[pi[0]];
    for (std::size_t i = 1; i < pi.size(); ++i) product = stdid::mat_mul(product, xs[pi[i]]);
    if (inversion_sign(pi) > 0) {
      total += product;
    } else {
      total -= product;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

}  // namespace oracle

#endif  // STDID_TESTS_ORACLE_HPP
