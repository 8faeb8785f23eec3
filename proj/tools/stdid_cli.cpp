// stdid: signed Eulerian trail sums and standard polynomial identities.
//
// Exit codes: 0 pass, 1 usage, 2 verification failure, 3 input format error,
// 4 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "stdid/bridge.hpp"
#include "stdid/errors.hpp"
#include "stdid/trails.hpp"
#include "stdid/verify.hpp"

using namespace stdid;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;
constexpr int kFormat = 3;
constexpr int kBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* sign_text(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "0"; }

std::string join_edges(const TrailPermutation& trail) {
  std::string out;
  for (std::size_t i = 0; i < trail.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(trail[i] + 1);
  }
  return out;
}

// Graph on one line: "n=2 s=1 t=2 edges=1>2*,2>1*,1>1" with '*' for marked.
std::string one_line(const MarkedDigraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " s=" << g.start() << " t=" << g.end() << " edges=";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out << (i ? "," : "") << e.source << '>' << e.target << (e.marked ? "*" : "");
  }
  return out.str();
}

TrailOptions trail_options(std::uint64_t budget, unsigned threads) {
  TrailOptions options;
  options.node_budget = budget;
  options.threads = threads == 0 ? 1 : threads;
  return options;
}

std::size_t one_based(std::size_t index, const MarkedDigraph& g, const char* what) {
  if (index < 1 || index > g.edge_count()) {
    throw UsageError(std::string(what) + " must be an edge index in [1, " + std::to_string(g.edge_count()) + "]");
  }
  return index - 1;
}

struct SumArgs {
  std::string file;
  bool list = false;
  std::vector<std::string> filters;
  unsigned threads = 1;
  std::uint64_t budget = TrailOptions{}.node_budget;
};

int cmd_sum(const SumArgs& args) {
  const MarkedDigraph g = read_graph_file(args.file);
  std::vector<TrailConstraint> constraints;
  for (const auto& f : args.filters) constraints.push_back(parse_constraint(f));
  const TrailOptions options = trail_options(args.budget, args.threads);

  if (args.list) {
    enumerate_trails(
        g,
        [](const TrailPermutation& t, int sign, int marked) {
          std::cout << "trail=" << join_edges(t) << " sgn=" << sign_text(sign) << " sgn_M=" << sign_text(marked) << '\n';
        },
        options);
  }
  const SignedSumReport r = signed_sum(g, options);
  std::cout << "S=" << r.signed_sum << " T=" << r.magnitude << " trails=" << r.trail_count << '\n';
  if (!constraints.empty()) {
    std::string spec;
    for (const auto& c : constraints) spec += (spec.empty() ? "" : ";") + format_constraint(c);
    std::cout << "filter=" << spec << " S=" << filtered_signed_sum(g, constraints, options) << '\n';
  }
  return kPass;
}

struct GnArgs {
  std::size_t n = 2;
  std::size_t mbar = 1;
  std::string emit;
  bool compute = false;
  unsigned threads = 1;
  std::uint64_t budget = TrailOptions{}.node_budget;
};

int cmd_gn(const GnArgs& args) {
  if (args.n < 2 || args.mbar < 1) throw UsageError("need --n >= 2 and --mbar >= 1");
  const MarkedDigraph g = make_gn(args.n, args.mbar);
  if (!args.emit.empty()) {
    if (args.emit == "-") {
      write_graph(std::cout, g);
    } else {
      std::ofstream out(args.emit);
      if (!out) throw UsageError("cannot write '" + args.emit + "'");
      write_graph(out, g);
    }
  }
  if (!args.compute) return kPass;
  const Integer expected = gn_closed_form(args.n, args.mbar);
  const SignedSumReport r = signed_sum(g, trail_options(args.budget, args.threads));
  const bool pass = r.signed_sum == expected;
  std::cout << "n=" << args.n << " mbar=" << args.mbar << " edges=" << g.edge_count() << " trails=" << r.trail_count
            << " expected=" << expected << " computed=" << r.signed_sum << " result=" << (pass ? "pass" : "FAIL")
            << '\n';
  return pass ? kPass : kFailure;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = TrailOptions{}.node_budget;
};

int cmd_verify(const VerifyArgs& args) {
  SuiteOptions options;
  options.seed = args.seed;
  options.trails = trail_options(args.budget, args.threads);
  const VerificationReport report = run_suite(args.suite, options);
  print_report(std::cout, report);
  std::cerr << "wall_time_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count()
            << '\n';
  return report.ok() ? kPass : kFailure;
}

struct ExhaustiveArgs {
  std::size_t n = 2;
  std::size_t k = 4;
  std::size_t bmax = 0;
  bool stop_on_witness = false;
  std::size_t max_witnesses = 10;
  double max_classes = 5e7;
  std::uint64_t budget = TrailOptions{}.node_budget;
};

// Upper bound on the edge multisets the enumeration walks: C(2n^2 + k - 1, k).
double multiset_estimate(std::size_t n, std::size_t k) {
  const double types = 2.0 * static_cast<double>(n * n);
  double count = 1;
  for (std::size_t i = 1; i <= k; ++i) count = count * (types + static_cast<double>(i) - 1) / static_cast<double>(i);
  return count;
}

int cmd_exhaustive(const ExhaustiveArgs& args) {
  if (args.n < 1 || args.k < 1) throw UsageError("need --n >= 1 and --k >= 1");
  const double estimate = multiset_estimate(args.n, args.k);
  if (estimate > args.max_classes) {
    std::ostringstream what;
    what << "about " << static_cast<std::uint64_t>(estimate) << " edge multisets exceeds --max-classes";
    throw BudgetExceeded(what.str());
  }
  const TrailOptions options = trail_options(args.budget, 1);
  std::map<Integer, std::size_t> histogram;
  std::size_t witnesses = 0;
  const EnumerationReport e = enumerate_marked_graphs(args.n, args.k, args.bmax, [&](const MarkedDigraph& g) {
    const Integer t = signed_sum(g, options).magnitude;
    ++histogram[t];
    if (t == 0) return true;
    if (witnesses++ < args.max_witnesses) std::cout << "witness T=" << t << ' ' << one_line(g) << '\n';
    return !args.stop_on_witness;
  });
  for (const auto& [t, count] : histogram) std::cout << "T=" << t << " classes=" << count << '\n';
  std::cout << "n=" << args.n << " k=" << args.k << " bmax=" << args.bmax << " classes=" << e.yielded
            << " skipped=" << e.skipped << " witnesses=" << witnesses << (e.stopped ? " stopped=1" : "")
            << " all_zero=" << (witnesses == 0 ? "yes" : "no") << '\n';
  return kPass;
}

struct TransformArgs {
  std::string file;
  std::string op;
  std::size_t a = 0;
  std::size_t c = 0;
  std::vector<std::size_t> perm;
};

int cmd_transform(const TransformArgs& args) {
  const MarkedDigraph g = read_graph_file(args.file);
  MarkedDigraph out = g;
  if (args.op == "opposite") {
    out = opposite(g);
  } else if (args.op == "extend") {
    out = extend(g);
  } else if (args.op == "restrict") {
    out = restrict_extended(g);
  } else if (args.op == "surgery-in" || args.op == "surgery-out") {
    const std::size_t a = one_based(args.a, g, "--a");
    const std::size_t c = one_based(args.c, g, "--c");
    try {
      out = args.op == "surgery-in" ? surgery_in(g, a, c) : surgery_out(g, a, c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (args.op == "relabel") {
    std::vector<std::size_t> pi;
    for (const std::size_t p : args.perm) pi.push_back(one_based(p, g, "--perm entry"));
    try {
      const Relabeling r = relabel(g, pi);
      out = r.graph;
      std::cout << "# sign_relation=" << sign_text(r.sign_relation) << '\n';
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  write_graph(std::cout, out);
  return kPass;
}

struct CrossCheckArgs {
  std::string file;
  std::uint64_t budget = TrailOptions{}.node_budget;
};

int cmd_crosscheck(const CrossCheckArgs& args) {
  const MarkedDigraph g = read_graph_file(args.file);
  const CrossCheckReport r = cross_check(g, {}, trail_options(args.budget, 1));
  std::cout << "entry=" << render(r.entry) << " T=" << r.magnitude << " sign=" << sign_text(r.observed_sign)
            << " result=" << (r.agrees ? "agrees" : "disagrees") << '\n';
  return r.agrees ? kPass : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed Eulerian trail sums and standard polynomial identities for M_n(E^m)"};
  app.require_subcommand(1);
  app.footer(
      "Graph files:  first line 'n <n> s <s> t <t>', then one '<source> <target> <0|1>' line per edge\n"
      "              in enumeration order (1 = marked). '#' starts a comment.\n"
      "Filters:      subtrail:3,5,2      edges 3,5,2 consecutively\n"
      "              precedes:1,2|4      subtrail 1,2 ends before subtrail 4 starts\n"
      "              at:4@7              edge 4 at position 7\n"
      "Exit codes:   0 pass, 1 usage, 2 verification failure, 3 format error, 4 budget exceeded");

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "signed trail sum S, T = |S| and the trail count of a graph file");
  sum_cmd->add_option("file", sum.file, "graph file")->required();
  sum_cmd->add_flag("--list-trails", sum.list, "print every trail with sgn(sigma) and sgn(sigma_M)");
  sum_cmd->add_option("--filter", sum.filters, "restrict to trails satisfying a constraint (repeatable)");
  sum_cmd->add_option("--threads", sum.threads, "worker threads")->capture_default_str();
  sum_cmd->add_option("--budget", sum.budget, "search node budget")->capture_default_str();

  GnArgs gn;
  auto* gn_cmd = app.add_subcommand("gn", "the witness family G_n");
  gn_cmd->add_option("--n", gn.n, "vertices (>= 2)")->required();
  gn_cmd->add_option("--mbar", gn.mbar, "half the number of marked edges (>= 1)")->required();
  auto* emit = gn_cmd->add_option("--emit", gn.emit, "write the graph file here ('-' for stdout)");
  gn_cmd->add_flag("--compute", gn.compute, "compute S and compare with the closed form")->excludes(emit);
  gn_cmd->add_option("--threads", gn.threads, "worker threads")->capture_default_str();
  gn_cmd->add_option("--budget", gn.budget, "search node budget")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", verify.seed, "seed for randomized suites")->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "worker threads per signed sum")->capture_default_str();
  verify_cmd->add_option("--budget", verify.budget, "search node budget per graph")->capture_default_str();

  ExhaustiveArgs exhaustive;
  auto* exhaustive_cmd = app.add_subcommand("exhaustive", "T over every marked graph class of a given size");
  exhaustive_cmd->add_option("--n", exhaustive.n, "vertices")->required();
  exhaustive_cmd->add_option("--k", exhaustive.k, "edges")->required();
  exhaustive_cmd->add_option("--bmax", exhaustive.bmax, "maximum number of marked edges")->required();
  exhaustive_cmd->add_flag("--stop-on-witness", exhaustive.stop_on_witness, "stop at the first class with T > 0");
  exhaustive_cmd->add_option("--max-witnesses", exhaustive.max_witnesses, "witness lines to print")
      ->capture_default_str();
  exhaustive_cmd->add_option("--max-classes", exhaustive.max_classes, "refuse larger searches (exit 4)")
      ->capture_default_str();
  exhaustive_cmd->add_option("--budget", exhaustive.budget, "search node budget per graph")->capture_default_str();

  TransformArgs transform;
  auto* transform_cmd = app.add_subcommand("transform", "apply a graph operation and print the result");
  transform_cmd->add_option("file", transform.file, "graph file")->required();
  transform_cmd->add_option("--op", transform.op, "operation")
      ->required()
      ->check(CLI::IsMember({"opposite", "extend", "restrict", "surgery-in", "surgery-out", "relabel"}));
  transform_cmd->add_option("--a", transform.a, "surgery edge a (1-based)");
  transform_cmd->add_option("--c", transform.c, "surgery partner edge c or d (1-based)");
  transform_cmd->add_option("--perm", transform.perm, "relabel: new edge i is old edge perm[i] (1-based)")
      ->delimiter(',');

  CrossCheckArgs crosscheck;
  auto* crosscheck_cmd =
      app.add_subcommand("crosscheck", "compare the (s,t) entry of s_k with T(G,B) on a graph file");
  crosscheck_cmd->add_option("file", crosscheck.file, "graph file")->required();
  crosscheck_cmd->add_option("--budget", crosscheck.budget, "search node budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*sum_cmd) return cmd_sum(sum);
    if (*gn_cmd) return cmd_gn(gn);
    if (*verify_cmd) return cmd_verify(verify);
    if (*exhaustive_cmd) return cmd_exhaustive(exhaustive);
    if (*transform_cmd) return cmd_transform(transform);
    if (*crosscheck_cmd) return cmd_crosscheck(crosscheck);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  }
  return kUsage;
}
