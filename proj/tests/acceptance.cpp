// Acceptance run: one PASS/FAIL line per criterion, exact integers only.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stdid/bridge.hpp"
#include "stdid/grassmann.hpp"
#include "stdid/permutation.hpp"
#include "stdid/random.hpp"
#include "stdid/trails.hpp"
#include "stdid/verify.hpp"

using namespace stdid;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Integer s_of(const MarkedDigraph& g) { return signed_sum(g).signed_sum; }

void criterion_1(Outcome& o) {
  const Integer s[] = {4, 36, 576};
  const Integer p[] = {8, 108, 2304};
  for (std::size_t mbar = 1; mbar <= 3; ++mbar) {
    const SignedSumReport r = signed_sum(make_gn(2, mbar));
    o.require(r.signed_sum == s[mbar - 1], "S(G_2,mbar=" + std::to_string(mbar) + ")=" + r.signed_sum.str());
    o.require(r.trail_count == p[mbar - 1], "|P(G_2,mbar=" + std::to_string(mbar) + ")|=" + r.trail_count.str());
    o.detail << " S=" << r.signed_sum << " trails=" << r.trail_count;
  }
}

void criterion_2(Outcome& o) {
  const Integer s[] = {4, 64, 1440};
  for (std::size_t mbar = 1; mbar <= 3; ++mbar) {
    const Integer value = s_of(make_gn(3, mbar));
    o.require(value == s[mbar - 1], "S(G_3,mbar=" + std::to_string(mbar) + ")=" + value.str());
    o.detail << " S=" << value;
  }
}

void criterion_3(Outcome& o) {
  // S(G_n) at n = 3, 4, 5 for mbar = 1 and 2.
  const Integer pinned[2][3] = {{4, 16, 80}, {64, 320, 1920}};
  for (std::size_t mbar = 1; mbar <= 2; ++mbar) {
    Integer previous = s_of(make_gn(3, mbar));
    o.require(previous == pinned[mbar - 1][0], "S(G_3)");
    for (std::size_t n = 4; n <= 5; ++n) {
      const Integer value = s_of(make_gn(n, mbar));
      o.require(value == Integer(mbar + n - 1) * previous,
                "recursion at n=" + std::to_string(n) + " mbar=" + std::to_string(mbar));
      o.require(value == pinned[mbar - 1][n - 3], "S(G_" + std::to_string(n) + ")=" + value.str());
      o.detail << " S(G_" << n << ",mbar=" << mbar << ")=" << value;
      previous = value;
    }
  }
}

void criterion_4(Outcome& o) {
  const std::size_t edges[3][2] = {{5, 7}, {9, 11}, {13, 15}};
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t mbar = 1; mbar <= 2; ++mbar) {
      const MarkedDigraph g = make_gn(n, mbar);
      const Integer t = signed_sum(g).magnitude;
      o.require(g.edge_count() == edges[n - 2][mbar - 1], "edge count");
      o.require(t > 0, "T(G_" + std::to_string(n) + ",mbar=" + std::to_string(mbar) + ")=0");
      o.detail << " T(" << n << ',' << mbar << ")=" << t;
    }
  }
}

std::size_t count_nonzero(std::size_t n, std::size_t k, std::size_t bmax, std::size_t& classes) {
  std::size_t nonzero = 0;
  classes = 0;
  enumerate_marked_graphs(n, k, bmax, [&](const MarkedDigraph& g) {
    ++classes;
    if (signed_sum(g).magnitude != 0) ++nonzero;
    return true;
  });
  return nonzero;
}

void criterion_5(Outcome& o) {
  for (const std::size_t k : {std::size_t{6}, std::size_t{7}}) {
    std::size_t classes = 0;
    const std::size_t nonzero = count_nonzero(2, k, 3, classes);
    o.require(nonzero == 0, "k=" + std::to_string(k) + " has " + std::to_string(nonzero) + " classes with T>0");
    o.require(classes > 0, "no classes enumerated");
    o.detail << " k=" << k << " classes=" << classes << " nonzero=" << nonzero;
  }
}

void criterion_6(Outcome& o) {
  std::size_t classes = 0;
  const std::size_t nonzero = count_nonzero(2, 4, 0, classes);
  o.require(nonzero == 0 && classes > 0, "n=2 k=4 exhaustive");
  o.detail << " n=2,k=4 classes=" << classes << " nonzero=" << nonzero;

  std::mt19937_64 rng(0);
  std::size_t sampled_nonzero = 0;
  for (int i = 0; i < 100; ++i) {
    if (signed_sum(random_balanced_graph(rng, {3, 3, 6, 6, 0})).magnitude != 0) ++sampled_nonzero;
  }
  o.require(sampled_nonzero == 0, "n=3 k=6 sample");
  o.detail << " n=3,k=6 sampled=100 nonzero=" << sampled_nonzero;
}

void criterion_7(Outcome& o) {
  std::mt19937_64 rng(7);
  std::size_t held = 0;
  std::size_t instances = 0;
  while (instances < 200) {
    const MarkedDigraph g = random_balanced_graph(rng, {1, 3, 1, 7, 3});
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!g.edge(i).is_loop()) candidates.push_back(i);
    }
    if (candidates.empty()) continue;
    const std::size_t a = candidates[draw_uniform(rng, 0, candidates.size() - 1)];
    const SwanSides sides = swan_sides(g, a);
    ++instances;
    if (sides.lhs == sides.rhs) ++held;
  }
  o.require(held == 200, "identity failed on " + std::to_string(200 - held) + " instances");
  o.detail << " held=" << held << "/200";
}

void criterion_8(Outcome& o) {
  std::mt19937_64 rng(8);
  std::size_t agree = 0;
  for (int i = 0; i < 100; ++i) {
    if (cross_check(random_balanced_graph(rng, {1, 3, 1, 8, 3})).agrees) ++agree;
  }
  o.require(agree == 100, "random sample");
  std::size_t classes = 0;
  std::size_t exhaustive_agree = 0;
  enumerate_marked_graphs(2, 6, 3, [&](const MarkedDigraph& g) {
    ++classes;
    if (cross_check(g).agrees) ++exhaustive_agree;
    return true;
  });
  o.require(exhaustive_agree == classes && classes > 0, "n=2 k=6 classes");
  o.detail << " sampled=" << agree << "/100 n=2,k=6 classes=" << exhaustive_agree << '/' << classes;
}

TrailConstraint random_constraint(std::mt19937_64& rng, std::size_t k) {
  const std::size_t a = draw_uniform(rng, 0, k - 1);
  const std::size_t b = draw_uniform(rng, 0, k - 1);
  switch (draw_uniform(rng, 0, 2)) {
    case 0:
      return a == b ? TrailConstraint{Subtrail{{a}}} : TrailConstraint{Subtrail{{a, b}}};
    case 1:
      return Precedes{{a}, {b}};
    default:
      return AtPosition{a, draw_uniform(rng, 0, k - 1)};
  }
}

void criterion_9(Outcome& o) {
  std::mt19937_64 rng(9);
  const RandomGraphShape shape{1, 3, 1, 7, 3};

  // Relabeling.
  std::size_t relabel_ok = 0;
  std::size_t preserving = 0;
  std::size_t preserving_ok = 0;
  std::size_t literal_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, shape);
    const Permutation pi = random_permutation(rng, g.edge_count());
    const Relabeling r = relabel(g, pi);
    const SignedSumReport before = signed_sum(g);
    const SignedSumReport after = signed_sum(r.graph);
    if (after.signed_sum == r.sign_relation * before.signed_sum && after.magnitude == before.magnitude) ++relabel_ok;
    if (after.signed_sum == sgn_perm(pi) * before.signed_sum) ++literal_ok;
    if (r.sign_relation == sgn_perm(pi)) {
      ++preserving;
      if (after.signed_sum == sgn_perm(pi) * before.signed_sum) ++preserving_ok;
    }
  }
  o.require(relabel_ok == 100, "relabel law");
  o.require(preserving_ok == preserving, "sgn(pi) law on marked-order-preserving pi");
  o.detail << " relabel=" << relabel_ok << "/100 sgn(pi)-only: marked-order-preserving " << preserving_ok << '/'
           << preserving << ", all " << literal_ok << "/100";

  // Swaps of parallel subtrails.
  std::size_t swaps = 0;
  std::size_t swaps_ok = 0;
  for (int i = 0; i < 50; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, shape);
    for (const auto& t : list_trails(g)) {
      for (const auto& [q1, q2] : parallel_occurrence_pairs(g, t)) {
        const SwapResult s = swap_parallel_subtrails(g, t, q1, q2);
        ++swaps;
        if (is_eulerian_trail(g, s.trail) && sgn_perm(s.trail) == s.predicted_sign * sgn_perm(t) &&
            marked_sign(g, s.trail) == s.predicted_marked_sign * marked_sign(g, t)) {
          ++swaps_ok;
        }
      }
    }
  }
  o.require(swaps_ok == swaps && swaps > 0, "swap predictions");
  o.detail << " swaps=" << swaps_ok << '/' << swaps;

  // Partition additivity: a constraint and its complement, and the two orders of a disjoint pair.
  std::size_t additive = 0;
  for (int i = 0; i < 50; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, shape);
    const TrailConstraint c = random_constraint(rng, g.edge_count());
    Integer complement = 0;
    enumerate_trails(g, [&](const TrailPermutation& t, int sign, int marked) {
      if (!satisfies(t, c)) complement += sign * marked;
    });
    const std::vector<TrailConstraint> only{c};
    bool ok = filtered_signed_sum(g, only) + complement == s_of(g);
    if (const auto* p = std::get_if<Precedes>(&c); p && p->first != p->second) {
      const std::vector<TrailConstraint> both{Subtrail{p->first}, Subtrail{p->second}};
      const std::vector<TrailConstraint> forward{Precedes{p->first, p->second}};
      const std::vector<TrailConstraint> backward{Precedes{p->second, p->first}};
      ok = ok && filtered_signed_sum(g, both) == filtered_signed_sum(g, forward) + filtered_signed_sum(g, backward);
    }
    if (ok) ++additive;
  }
  o.require(additive == 50, "partition additivity");
  o.detail << " partitions=" << additive << "/50";

  // Opposite graph.
  std::size_t opposite_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, shape);
    const SignedSumReport a = signed_sum(g);
    const SignedSumReport b = signed_sum(opposite(g));
    if (b.magnitude == a.magnitude &&
        b.signed_sum == reversal_sign(g.edge_count(), g.marked_count()) * a.signed_sum) {
      ++opposite_ok;
    }
  }
  o.require(opposite_ok == 100, "opposite");
  o.detail << " opposite=" << opposite_ok << "/100";
}

GrassmannMatrix random_matrix(std::mt19937_64& rng, std::size_t n, unsigned m) {
  GrassmannMatrix x(n, m);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (int term = 0; term < 2; ++term) {
        const Mask mask = static_cast<Mask>(draw_uniform(rng, 0, (std::size_t{1} << m) - 1));
        x(i, j).add_term(mask, static_cast<long>(draw_uniform(rng, 0, 6)) - 3);
      }
    }
  }
  return x;
}

// Sparse input: a single signed monomial times a matrix unit.
GrassmannMatrix random_basis(std::mt19937_64& rng, std::size_t n, unsigned m) {
  Mask mask = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (draw_uniform(rng, 0, 3) == 0) mask |= Mask{1} << i;
  }
  return GrassmannMatrix::unit(n, m, draw_uniform(rng, 1, n), draw_uniform(rng, 1, n),
                               GrassmannElement::monomial(m, mask, draw_uniform(rng, 0, 1) == 0 ? 1 : -1));
}

GrassmannElement random_homogeneous(std::mt19937_64& rng, unsigned m, unsigned degree) {
  GrassmannElement x(m);
  for (int i = 0; i < 3; ++i) {
    Mask mask = 0;
    while (mask_degree(mask) < degree) mask |= Mask{1} << draw_uniform(rng, 0, m - 1);
    x.add_term(mask, static_cast<long>(draw_uniform(rng, 1, 5)));
  }
  return x;
}

void criterion_10(Outcome& o) {
  std::mt19937_64 rng(10);
  std::size_t graded = 0;
  std::size_t associative = 0;
  for (int i = 0; i < 200; ++i) {
    const unsigned m = static_cast<unsigned>(draw_uniform(rng, 1, 6));
    const unsigned d = static_cast<unsigned>(draw_uniform(rng, 0, m));
    const unsigned e = static_cast<unsigned>(draw_uniform(rng, 0, m));
    const GrassmannElement x = random_homogeneous(rng, m, d);
    const GrassmannElement y = random_homogeneous(rng, m, e);
    const Integer sign = (d * e) % 2 == 0 ? 1 : -1;
    if (x * y == sign * (y * x)) ++graded;

    const std::size_t n = draw_uniform(rng, 1, 3);
    const GrassmannMatrix a = random_matrix(rng, n, m);
    const GrassmannMatrix b = random_matrix(rng, n, m);
    const GrassmannMatrix c = random_matrix(rng, n, m);
    if ((a * b) * c == a * (b * c)) ++associative;
  }
  o.require(graded == 200, "graded commutativity");
  o.require(associative == 200, "associativity");

  std::size_t alternating = 0;
  std::size_t prefix = 0;
  const int trials = 60;
  for (int i = 0; i < trials; ++i) {
    const std::size_t n = draw_uniform(rng, 1, 3);
    const unsigned m = static_cast<unsigned>(draw_uniform(rng, 0, 6));
    const std::size_t k = draw_uniform(rng, 2, 6);
    std::vector<GrassmannMatrix> xs;
    for (std::size_t j = 0; j < k; ++j) xs.push_back(random_basis(rng, n, m));

    // Alternating: swapping two arguments negates, repeating one kills it.
    const GrassmannMatrix base = standard_polynomial(xs);
    const std::size_t p = draw_uniform(rng, 0, k - 1);
    const std::size_t q = (p + 1 + draw_uniform(rng, 0, k - 2)) % k;
    auto swapped = xs;
    std::swap(swapped[p], swapped[q]);
    auto repeated = xs;
    repeated[q] = xs[p];
    if (standard_polynomial(swapped) == GrassmannElement::scalar(m, -1) * base &&
        standard_polynomial(repeated).is_zero()) {
      ++alternating;
    }

    // s_{k+1}(1, x_1..x_k) equals s_k for even k and vanishes for odd k.
    if (k + 1 <= 6) {
      auto with_one = xs;
      with_one.insert(with_one.begin(), GrassmannMatrix::identity(n, m));
      const GrassmannMatrix lifted = standard_polynomial(with_one);
      if (k % 2 == 0 ? lifted == base : lifted.is_zero()) ++prefix;
    } else {
      ++prefix;
    }
  }
  o.require(alternating == static_cast<std::size_t>(trials), "alternating");
  o.require(prefix == static_cast<std::size_t>(trials), "identity prefix");
  o.detail << " graded=" << graded << "/200 associative=" << associative << "/200 alternating=" << alternating << '/'
           << trials << " prefix=" << prefix << '/' << trials;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"closed forms n=2", criterion_1},
      {"closed forms n=3", criterion_2},
      {"recursion n=4,5", criterion_3},
      {"lower bound witnesses", criterion_4},
      {"upper bound exhaustive n=2", criterion_5},
      {"Amitsur-Levitzki", criterion_6},
      {"loop surgery identity", criterion_7},
      {"bridge equivalence", criterion_8},
      {"sign machinery", criterion_9},
      {"Grassmann kernel", criterion_10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto started = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " (" << criteria[i].first << ")"
              << o.detail.str() << " time_ms=" << ms << std::endl;
  }
  return all ? 0 : 1;
}
