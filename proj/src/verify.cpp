#include "stdid/verify.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#include "stdid/bridge.hpp"
#include "stdid/random.hpp"

namespace stdid {

namespace {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string str(const Integer& x) { return x.str(); }
std::string str(std::size_t x) { return std::to_string(x); }

void add_case(VerificationReport& report, std::string id, const std::string& expected, const std::string& computed) {
  report.cases.push_back({std::move(id), expected, computed, expected == computed});
}

}  // namespace

Integer gn_closed_form(std::size_t n, std::size_t mbar) {
  if (n < 2 || mbar < 1) throw std::invalid_argument("gn_closed_form: needs n >= 2 and mbar >= 1");
  if (n == 2) {
    const Integer f = factorial(mbar + 1);
    return f * f;
  }
  return 2 * Integer(mbar) * factorial(mbar + n - 1) * factorial(mbar) / 3;
}

Integer gn2_trail_count(std::size_t mbar) {
  const Integer f = factorial(mbar + 1);
  return f * f * (mbar + 1);
}

SwanSides swan_sides(const MarkedDigraph& g, std::size_t a, const TrailOptions& options) {
  if (a >= g.edge_count() || g.edge(a).is_loop()) throw std::invalid_argument("swan_sides: a must be a non-loop edge");
  const MarkedDigraph star = extend(g);
  const std::size_t a_star = a + 1;
  const Edge& edge_a = star.edge(a_star);

  SwanSides sides;
  sides.lhs = signed_sum(g, options).signed_sum;
  for (std::size_t c = 0; c < star.edge_count(); ++c) {
    if (c != a_star && star.edge(c).target == edge_a.source) {
      sides.rhs += signed_sum(surgery_in(star, a_star, c), options).signed_sum;
    }
  }
  for (std::size_t d = 0; d < star.edge_count(); ++d) {
    if (d != a_star && star.edge(d).source == edge_a.target) {
      sides.rhs -= signed_sum(surgery_out(star, a_star, d), options).signed_sum;
    }
  }
  return sides;
}

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

namespace {

std::string describe(const MarkedDigraph& g) {
  std::string out = "n" + std::to_string(g.vertex_count()) + ":s" + std::to_string(g.start()) + ":t" +
                    std::to_string(g.end()) + ":";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (i > 0) out += ',';
    out += std::to_string(e.source) + ">" + std::to_string(e.target) + (e.marked ? "*" : "");
  }
  return out;
}

void suite_gn_formulas(VerificationReport& report, const SuiteOptions& options) {
  for (std::size_t mbar = 1; mbar <= 3; ++mbar) {
    const SignedSumReport r = signed_sum(make_gn(2, mbar), options.trails);
    add_case(report, "S(G_2,mbar=" + str(mbar) + ")", str(gn_closed_form(2, mbar)), str(r.signed_sum));
    add_case(report, "trails(G_2,mbar=" + str(mbar) + ")", str(gn2_trail_count(mbar)), str(r.trail_count));
  }
  for (std::size_t mbar = 1; mbar <= 3; ++mbar) {
    const SignedSumReport r = signed_sum(make_gn(3, mbar), options.trails);
    add_case(report, "S(G_3,mbar=" + str(mbar) + ")", str(gn_closed_form(3, mbar)), str(r.signed_sum));
  }
  for (std::size_t mbar = 1; mbar <= 2; ++mbar) {
    const SignedSumReport r = signed_sum(make_gn(4, mbar), options.trails);
    add_case(report, "S(G_4,mbar=" + str(mbar) + ")", str(gn_closed_form(4, mbar)), str(r.signed_sum));
  }
}

void suite_recursion(VerificationReport& report, const SuiteOptions& options) {
  for (std::size_t mbar = 1; mbar <= 2; ++mbar) {
    for (std::size_t n = 4; n <= 5; ++n) {
      const Integer smaller = signed_sum(make_gn(n - 1, mbar), options.trails).signed_sum;
      const Integer larger = signed_sum(make_gn(n, mbar), options.trails).signed_sum;
      add_case(report, "S(G_" + str(n) + ",mbar=" + str(mbar) + ")=(mbar+n-1)*S(G_" + str(n - 1) + ")",
               str(Integer(mbar + n - 1) * smaller), str(larger));
    }
  }
}

void suite_lower_bound(VerificationReport& report, const SuiteOptions& options) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t mbar = 1; mbar <= 2; ++mbar) {
      const MarkedDigraph g = make_gn(n, mbar);
      const Integer t = signed_sum(g, options.trails).magnitude;
      add_case(report, "edges(G_" + str(n) + ",mbar=" + str(mbar) + ")", str(2 * mbar + 4 * n - 5),
               str(g.edge_count()));
      add_case(report, "T(G_" + str(n) + ",mbar=" + str(mbar) + ")>0", "true", t > 0 ? "true" : "false");
    }
  }
}

// Counts the classes with T != 0 among all marked graphs of a shape.
void exhaustive_zero_case(VerificationReport& report, std::size_t n, std::size_t k, std::size_t bmax,
                          const SuiteOptions& options) {
  std::size_t nonzero = 0;
  const EnumerationReport e = enumerate_marked_graphs(n, k, bmax, [&](const MarkedDigraph& g) {
    if (signed_sum(g, options.trails).magnitude != 0) ++nonzero;
    return true;
  });
  add_case(report,
           "n=" + str(n) + ",k=" + str(k) + ",bmax=" + str(bmax) + " classes=" + str(e.yielded) +
               " skipped=" + str(e.skipped) + " nonzero_T",
           "0", str(nonzero));
}

void suite_upper_n2(VerificationReport& report, const SuiteOptions& options) {
  exhaustive_zero_case(report, 2, 6, 3, options);
  exhaustive_zero_case(report, 2, 7, 3, options);
}

void suite_amitsur_levitzki(VerificationReport& report, const SuiteOptions& options) {
  exhaustive_zero_case(report, 2, 4, 0, options);
  std::mt19937_64 rng(options.seed);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, {3, 3, 6, 6, 0});
    if (signed_sum(g, options.trails).magnitude != 0) ++nonzero;
  }
  add_case(report, "n=3,k=6,B=empty sampled=100 nonzero_T", "0", str(nonzero));
}

// Seeded graph with at least one non-loop edge, and a uniformly chosen one.
std::pair<MarkedDigraph, std::size_t> random_swan_instance(std::mt19937_64& rng) {
  while (true) {
    MarkedDigraph g = random_balanced_graph(rng, {1, 3, 1, 7, 3});
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!g.edge(i).is_loop()) candidates.push_back(i);
    }
    if (candidates.empty()) continue;
    const std::size_t a = candidates[draw_uniform(rng, 0, candidates.size() - 1)];
    return {std::move(g), a};
  }
}

void suite_swan(VerificationReport& report, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto [g, a] = random_swan_instance(rng);
    const SwanSides sides = swan_sides(g, a, options.trails);
    add_case(report, "swan#" + str(i) + " a=" + str(a + 1) + " " + describe(g), str(sides.lhs), str(sides.rhs));
  }
}

void suite_bridge(VerificationReport& report, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < 100; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, {1, 3, 1, 8, 3});
    const CrossCheckReport r = cross_check(g, {}, options.trails);
    add_case(report, "bridge#" + str(i) + " " + describe(g) + " T=" + str(r.magnitude) + " entry=" + render(r.entry),
             "agrees", r.agrees ? "agrees" : "disagrees");
  }
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  enumerate_marked_graphs(2, 6, 3, [&](const MarkedDigraph& g) {
    ++checked;
    if (!cross_check(g, {}, options.trails).agrees) ++disagreements;
    return true;
  });
  add_case(report, "n=2,k=6,bmax=3 all classes=" + str(checked) + " disagreements", "0", str(disagreements));
}

void suite_signs(VerificationReport& report, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);

  // Relabeling law and T invariance.
  std::size_t relabel_failures = 0;
  std::size_t order_preserving = 0;
  std::size_t plain_sign_failures = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, {1, 3, 1, 7, 3});
    const Permutation pi = random_permutation(rng, g.edge_count());
    const Relabeling r = relabel(g, pi);
    const Integer before = signed_sum(g, options.trails).signed_sum;
    const Integer after = signed_sum(r.graph, options.trails).signed_sum;
    if (after != r.sign_relation * before || abs(after) != abs(before)) ++relabel_failures;
    if (r.sign_relation == sgn_perm(pi)) {
      ++order_preserving;
      if (after != sgn_perm(pi) * before) ++plain_sign_failures;
    }
  }
  add_case(report, "relabel S'=sign_relation*S, T'=T over 100 pi failures", "0", str(relabel_failures));
  add_case(report, "relabel S'=sgn(pi)*S where the marked-order factor is +1 (" + str(order_preserving) + " cases) failures",
           "0", str(plain_sign_failures));

  // Swap-sign predictions on every disjoint parallel pair of every trail.
  std::size_t pairs = 0;
  std::size_t swap_failures = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, {1, 3, 2, 7, 3});
    enumerate_trails(
        g,
        [&](const TrailPermutation& trail, int sign, int msign) {
          for (const auto& [q1, q2] : parallel_occurrence_pairs(g, trail)) {
            ++pairs;
            const SwapResult s = swap_parallel_subtrails(g, trail, q1, q2);
            const bool ok = is_eulerian_trail(g, s.trail) && sgn_perm(s.trail) == s.predicted_sign * sign &&
                            marked_sign(g, s.trail) == s.predicted_marked_sign * msign;
            if (!ok) ++swap_failures;
          }
        },
        options.trails);
  }
  add_case(report, "swap predictions over " + str(pairs) + " parallel pairs failures", "0", str(swap_failures));

  // Partition additivity: C and not-C, and the precedence split.
  std::size_t partition_failures = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, {1, 3, 2, 7, 3});
    const auto trails = list_trails(g, options.trails);
    const auto& sample = trails[draw_uniform(rng, 0, trails.size() - 1)];
    const std::size_t k = g.edge_count();
    TrailConstraint c;
    switch (draw_uniform(rng, 0, 2)) {
      case 0: {
        const std::size_t len = draw_uniform(rng, 1, std::min<std::size_t>(3, k));
        const std::size_t at = draw_uniform(rng, 0, k - len);
        c = Subtrail{{sample.begin() + static_cast<std::ptrdiff_t>(at), sample.begin() + static_cast<std::ptrdiff_t>(at + len)}};
        break;
      }
      case 1: {
        const std::size_t x = draw_uniform(rng, 0, k - 1);
        std::size_t y = draw_uniform(rng, 0, k - 2);
        if (y >= x) ++y;
        c = Precedes{{sample[x]}, {sample[y]}};
        break;
      }
      default:
        c = AtPosition{draw_uniform(rng, 0, k - 1), draw_uniform(rng, 0, k - 1)};
    }
    const Integer total = signed_sum(g, options.trails).signed_sum;
    const Integer inside = filtered_signed_sum(g, std::span(&c, 1), options.trails);
    std::int64_t outside = 0;
    enumerate_trails(
        g,
        [&](const TrailPermutation& trail, int sign, int msign) {
          if (!satisfies(trail, c)) outside += sign * msign;
        },
        options.trails);
    if (inside + outside != total) ++partition_failures;
    if (const auto* p = std::get_if<Precedes>(&c)) {
      const std::vector<TrailConstraint> both{Subtrail{p->first}, Subtrail{p->second}};
      const std::vector<TrailConstraint> forward{Precedes{p->first, p->second}};
      const std::vector<TrailConstraint> backward{Precedes{p->second, p->first}};
      if (filtered_signed_sum(g, both, options.trails) !=
          filtered_signed_sum(g, forward, options.trails) + filtered_signed_sum(g, backward, options.trails)) {
        ++partition_failures;
      }
    }
  }
  add_case(report, "partition additivity over 50 constraints failures", "0", str(partition_failures));

  // Reversal.
  std::size_t reversal_failures = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const MarkedDigraph g = random_balanced_graph(rng, {1, 3, 1, 7, 3});
    const Integer s = signed_sum(g, options.trails).signed_sum;
    const Integer s_op = signed_sum(opposite(g), options.trails).signed_sum;
    if (s_op != reversal_sign(g.edge_count(), g.marked_count()) * s || abs(s_op) != abs(s)) ++reversal_failures;
  }
  add_case(report, "opposite S'=(-1)^(k(k-1)/2+b(b-1)/2)*S, T'=T over 100 graphs failures", "0",
           str(reversal_failures));
}

using SuiteFn = std::function<void(VerificationReport&, const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table{
      {"gn-formulas", suite_gn_formulas},
      {"recursion", suite_recursion},
      {"lower-bound", suite_lower_bound},
      {"upper-n2", suite_upper_n2},
      {"amitsur-levitzki", suite_amitsur_levitzki},
      {"swan", suite_swan},
      {"bridge", suite_bridge},
      {"signs", suite_signs},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gn-formulas", "recursion", "lower-bound", "upper-n2",
                                              "amitsur-levitzki", "swan", "bridge", "signs"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  VerificationReport report;
  report.suite = name;
  report.seed = options.seed;
  const auto started = std::chrono::steady_clock::now();
  it->second(report, options);
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

void print_report(std::ostream& out, const VerificationReport& report) {
  for (const auto& c : report.cases) {
    out << "case=" << c.id << " expected=" << c.expected << " computed=" << c.computed
        << " result=" << (c.pass ? "pass" : "FAIL") << '\n';
  }
  out << "suite=" << report.suite << " seed=" << report.seed << " passed=" << report.passed() << '/'
      << report.cases.size() << " status=" << (report.ok() ? "PASS" : "FAIL") << '\n';
}

}  // namespace stdid
