#include "stdid/trails.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stdid/errors.hpp"

namespace stdid {

namespace {

using Bits = std::uint64_t;

constexpr std::size_t kMaxTrailEdges = 64;

inline unsigned popcount(Bits x) { return static_cast<unsigned>(__builtin_popcountll(x)); }

// Shared bookkeeping for the node budget. Workers flush local counts in
// batches to keep the atomic off the hot path.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes) {
    const std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > limit_) {
      throw BudgetExceeded("trail enumeration exceeded the budget of " + std::to_string(limit_) + " search nodes");
    }
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Depth-first trail search over bit sets of edges. Every branch is checked
// for completability (all unused edges reachable from the head through unused
// edges), so on a balanced connected graph every leaf is an Eulerian trail.
class TrailSearch {
 public:
  explicit TrailSearch(const MarkedDigraph& g) : g_(g), k_(g.edge_count()) {
    if (k_ > kMaxTrailEdges) throw std::invalid_argument("trail enumeration supports at most 64 edges");
    out_.assign(g.vertex_count() + 1, 0);
    target_.resize(k_);
    above_.resize(k_);
    for (std::size_t e = 0; e < k_; ++e) {
      const Edge& edge = g.edge(e);
      out_[edge.source] |= Bits{1} << e;
      target_[e] = edge.target;
      if (edge.marked) marked_ |= Bits{1} << e;
      above_[e] = e + 1 >= 64 ? Bits{0} : ~((Bits{1} << (e + 1)) - 1);
    }
    all_ = k_ == 64 ? ~Bits{0} : (Bits{1} << k_) - 1;
    viable_ = validate(g).admits_trail();
  }

  bool viable() const { return viable_; }
  std::size_t edge_count() const { return k_; }

  struct State {
    Vertex head;
    Bits used;
    unsigned parity;
    unsigned marked_parity;
  };

  State initial() const { return {g_.start(), 0, 0, 0}; }

  // Candidate edges from the state, ascending, that keep the trail completable.
  template <typename Fn>
  void for_each_step(const State& state, Fn&& fn) const {
    Bits candidates = out_[state.head] & ~state.used;
    while (candidates != 0) {
      const std::size_t e = static_cast<std::size_t>(__builtin_ctzll(candidates));
      candidates &= candidates - 1;
      const Bits bit = Bits{1} << e;
      const Bits used = state.used | bit;
      const Vertex head = target_[e];
      if (used != all_ && !covers_remaining(head, all_ & ~used)) continue;
      State next{head, used, state.parity ^ (popcount(state.used & above_[e]) & 1U), state.marked_parity};
      if ((marked_ & bit) != 0) next.marked_parity ^= popcount(state.used & marked_ & above_[e]) & 1U;
      fn(e, next);
    }
  }

  bool complete(const State& state) const { return state.used == all_; }

 private:
  bool covers_remaining(Vertex from, Bits remaining) const {
    // Flood over vertices along remaining edges; succeed once every remaining
    // edge has a reached source.
    Bits reached_edges = 0;
    std::vector<Vertex>& stack = scratch_;
    stack.clear();
    visited_.assign(out_.size(), false);
    stack.push_back(from);
    visited_[from] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      Bits edges = out_[v] & remaining & ~reached_edges;
      reached_edges |= edges;
      while (edges != 0) {
        const std::size_t e = static_cast<std::size_t>(__builtin_ctzll(edges));
        edges &= edges - 1;
        const Vertex w = target_[e];
        if (!visited_[w]) {
          visited_[w] = true;
          stack.push_back(w);
        }
      }
    }
    return (remaining & ~reached_edges) == 0;
  }

  const MarkedDigraph& g_;
  std::size_t k_;
  std::vector<Bits> out_;
  std::vector<Vertex> target_;
  std::vector<Bits> above_;
  Bits marked_ = 0;
  Bits all_ = 0;
  bool viable_ = false;
  mutable std::vector<Vertex> scratch_;
  mutable std::vector<bool> visited_;
};

// Walks the subtree below `state`, charging nodes against the budget.
class Walker {
 public:
  Walker(const TrailSearch& search, NodeBudget& budget) : search_(search), budget_(budget) {}

  template <typename Leaf>
  void run(const TrailSearch::State& state, TrailPermutation& prefix, Leaf&& leaf) {
    tick();
    if (search_.complete(state)) {
      leaf(prefix, state);
      return;
    }
    search_.for_each_step(state, [&](std::size_t e, const TrailSearch::State& next) {
      prefix.push_back(e);
      run(next, prefix, leaf);
      prefix.pop_back();
    });
  }

  void flush() {
    if (pending_ > 0) {
      budget_.charge(pending_);
      pending_ = 0;
    }
  }

 private:
  void tick() {
    if (++pending_ >= 4096) flush();
  }

  const TrailSearch& search_;
  NodeBudget& budget_;
  std::uint64_t pending_ = 0;
};

inline int sign_of(unsigned parity) { return (parity & 1U) != 0 ? -1 : 1; }

struct PartialSum {
  std::int64_t signed_sum = 0;
  std::int64_t trails = 0;
};

}  // namespace

void enumerate_trails(const MarkedDigraph& g, const TrailVisitor& visit, const TrailOptions& options) {
  TrailSearch search(g);
  if (!search.viable()) return;
  NodeBudget budget(options.node_budget);
  Walker walker(search, budget);
  TrailPermutation prefix;
  prefix.reserve(search.edge_count());
  walker.run(search.initial(), prefix, [&](const TrailPermutation& trail, const TrailSearch::State& state) {
    visit(trail, sign_of(state.parity), sign_of(state.marked_parity));
  });
  walker.flush();
}

std::vector<TrailPermutation> list_trails(const MarkedDigraph& g, const TrailOptions& options) {
  std::vector<TrailPermutation> out;
  enumerate_trails(g, [&](const TrailPermutation& trail, int, int) { out.push_back(trail); }, options);
  return out;
}

bool is_eulerian_trail(const MarkedDigraph& g, std::span<const std::size_t> trail) {
  if (trail.size() != g.edge_count() || !is_permutation(trail)) return false;
  Vertex head = g.start();
  for (const std::size_t e : trail) {
    if (g.edge(e).source != head) return false;
    head = g.edge(e).target;
  }
  return head == g.end();
}

int marked_sign(const MarkedDigraph& g, std::span<const std::size_t> trail) {
  const Permutation positions = inverse(trail);
  const auto marked = g.marked_indices();
  return sgn_perm(sigma_m(positions, marked));
}

SignedSumReport signed_sum(const MarkedDigraph& g, const TrailOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SignedSumReport report;
  TrailSearch search(g);
  if (!search.viable()) {
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
  }

  NodeBudget budget(options.node_budget);
  auto accumulate = [](PartialSum& sum) {
    return [&sum](const TrailPermutation&, const TrailSearch::State& state) {
      sum.signed_sum += sign_of(state.parity ^ state.marked_parity);
      ++sum.trails;
    };
  };

  PartialSum total;
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1 || search.edge_count() < 2) {
    Walker walker(search, budget);
    TrailPermutation prefix;
    walker.run(search.initial(), prefix, accumulate(total));
    walker.flush();
  } else {
    // Split on the first two trail positions.
    struct Task {
      TrailSearch::State state;
      TrailPermutation prefix;
    };
    std::vector<Task> tasks;
    std::uint64_t split_nodes = 1;
    search.for_each_step(search.initial(), [&](std::size_t e1, const TrailSearch::State& s1) {
      ++split_nodes;
      if (search.complete(s1)) {
        tasks.push_back({s1, {e1}});
        return;
      }
      search.for_each_step(s1, [&](std::size_t e2, const TrailSearch::State& s2) {
        tasks.push_back({s2, {e1, e2}});
      });
    });
    budget.charge(split_nodes);

    std::vector<PartialSum> partials(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
      TrailSearch local(g);
      Walker walker(local, budget);
      try {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          TrailPermutation prefix = tasks[i].prefix;
          // The split step is already charged; run() charges it again, so
          // the budget is conservative by at most the task count.
          walker.run(tasks[i].state, prefix, accumulate(partials[i]));
        }
        walker.flush();
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& p : partials) {
      total.signed_sum += p.signed_sum;
      total.trails += p.trails;
    }
  }

  report.signed_sum = total.signed_sum;
  report.magnitude = abs(report.signed_sum);
  report.trail_count = total.trails;
  report.visited_nodes = budget.used();
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

// ---------------------------------------------------------------------------
// Constraints

namespace {

// Start position of the first consecutive occurrence of `pattern`, or npos.
std::size_t find_subtrail(std::span<const std::size_t> trail, std::span<const std::size_t> pattern) {
  if (pattern.empty() || pattern.size() > trail.size()) return std::string::npos;
  const auto it = std::search(trail.begin(), trail.end(), pattern.begin(), pattern.end());
  return it == trail.end() ? std::string::npos : static_cast<std::size_t>(it - trail.begin());
}

}  // namespace

bool satisfies(std::span<const std::size_t> trail, const TrailConstraint& constraint) {
  return std::visit(
      [&](const auto& c) -> bool {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, Subtrail>) {
          return find_subtrail(trail, c.edges) != std::string::npos;
        } else if constexpr (std::is_same_v<C, Precedes>) {
          // Edge indices are distinct in a trail, so each occurrence is unique.
          const std::size_t a = find_subtrail(trail, c.first);
          const std::size_t b = find_subtrail(trail, c.second);
          if (a == std::string::npos || b == std::string::npos) return false;
          return a + c.first.size() <= b;
        } else {
          return c.position < trail.size() && trail[c.position] == c.edge;
        }
      },
      constraint);
}

namespace {

std::size_t parse_index(std::string_view field, const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value == 0) {
    throw FormatError(0, "bad index '" + std::string(field) + "' in constraint '" + text + "'");
  }
  return value - 1;
}

std::vector<std::size_t> parse_index_list(std::string_view list, const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (true) {
    const std::size_t comma = list.find(',', i);
    out.push_back(parse_index(list.substr(i, comma == std::string_view::npos ? std::string_view::npos : comma - i), text));
    if (comma == std::string_view::npos) break;
    i = comma + 1;
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i] + 1);
  }
  return out;
}

}  // namespace

TrailConstraint parse_constraint(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw FormatError(0, "constraint '" + text + "' lacks a kind prefix");
  const std::string_view kind = std::string_view(text).substr(0, colon);
  const std::string_view body = std::string_view(text).substr(colon + 1);
  if (kind == "subtrail") return Subtrail{parse_index_list(body, text)};
  if (kind == "precedes") {
    const std::size_t bar = body.find('|');
    if (bar == std::string_view::npos) throw FormatError(0, "precedes constraint needs 'a,b|c,d'");
    return Precedes{parse_index_list(body.substr(0, bar), text), parse_index_list(body.substr(bar + 1), text)};
  }
  if (kind == "at") {
    const std::size_t at = body.find('@');
    if (at == std::string_view::npos) throw FormatError(0, "at constraint needs 'edge@position'");
    return AtPosition{parse_index(body.substr(0, at), text), parse_index(body.substr(at + 1), text)};
  }
  throw FormatError(0, "unknown constraint kind '" + std::string(kind) + "'");
}

std::string format_constraint(const TrailConstraint& constraint) {
  return std::visit(
      [](const auto& c) -> std::string {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, Subtrail>) {
          return "subtrail:" + join_indices(c.edges);
        } else if constexpr (std::is_same_v<C, Precedes>) {
          return "precedes:" + join_indices(c.first) + "|" + join_indices(c.second);
        } else {
          return "at:" + std::to_string(c.edge + 1) + "@" + std::to_string(c.position + 1);
        }
      },
      constraint);
}

Integer filtered_signed_sum(const MarkedDigraph& g, std::span<const TrailConstraint> constraints,
                            const TrailOptions& options) {
  std::int64_t sum = 0;
  enumerate_trails(
      g,
      [&](const TrailPermutation& trail, int sign, int msign) {
        for (const auto& c : constraints) {
          if (!satisfies(trail, c)) return;
        }
        sum += sign * msign;
      },
      options);
  return Integer{sum};
}

// ---------------------------------------------------------------------------
// Parallel subtrail swap

SwapResult swap_parallel_subtrails(const MarkedDigraph& g, std::span<const std::size_t> trail, Occurrence q1,
                                   Occurrence q2) {
  const std::size_t k = trail.size();
  for (const Occurrence& q : {q1, q2}) {
    if (q.length == 0 || q.start >= k || q.length > k - q.start) {
      throw std::invalid_argument("swap_parallel_subtrails: occurrence outside the trail");
    }
  }
  if (q2.start < q1.start) std::swap(q1, q2);
  if (q1.start + q1.length > q2.start) throw std::invalid_argument("swap_parallel_subtrails: occurrences overlap");

  const Edge& first1 = g.edge(trail[q1.start]);
  const Edge& last1 = g.edge(trail[q1.start + q1.length - 1]);
  const Edge& first2 = g.edge(trail[q2.start]);
  const Edge& last2 = g.edge(trail[q2.start + q2.length - 1]);
  if (first1.source != first2.source || last1.target != last2.target) {
    throw std::invalid_argument("swap_parallel_subtrails: subtrails are not parallel");
  }

  auto marked_in = [&](std::size_t from, std::size_t to) {
    std::size_t count = 0;
    for (std::size_t p = from; p < to; ++p) count += g.edge(trail[p]).marked ? 1 : 0;
    return count;
  };

  const std::size_t len1 = q1.length;
  const std::size_t len2 = q2.length;
  const std::size_t gap = q2.start - (q1.start + len1);
  const std::size_t marked1 = marked_in(q1.start, q1.start + len1);
  const std::size_t marked2 = marked_in(q2.start, q2.start + len2);
  const std::size_t marked_gap = marked_in(q1.start + len1, q2.start);

  SwapResult result;
  result.trail.reserve(k);
  auto append = [&](std::size_t from, std::size_t to) {
    result.trail.insert(result.trail.end(), trail.begin() + static_cast<std::ptrdiff_t>(from),
                        trail.begin() + static_cast<std::ptrdiff_t>(to));
  };
  append(0, q1.start);
  append(q2.start, q2.start + len2);
  append(q1.start + len1, q2.start);
  append(q1.start, q1.start + len1);
  append(q2.start + len2, k);

  result.predicted_sign = ((len1 * (gap + len2) + gap * len2) & 1U) != 0 ? -1 : 1;
  result.predicted_marked_sign = ((marked1 * (marked_gap + marked2) + marked_gap * marked2) & 1U) != 0 ? -1 : 1;
  return result;
}

std::vector<std::pair<Occurrence, Occurrence>> parallel_occurrence_pairs(const MarkedDigraph& g,
                                                                         std::span<const std::size_t> trail) {
  std::vector<std::pair<Occurrence, Occurrence>> out;
  const std::size_t k = trail.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t len1 = 1; i + len1 <= k; ++len1) {
      const Vertex from = g.edge(trail[i]).source;
      const Vertex to = g.edge(trail[i + len1 - 1]).target;
      for (std::size_t j = i + len1; j < k; ++j) {
        if (g.edge(trail[j]).source != from) continue;
        for (std::size_t len2 = 1; j + len2 <= k; ++len2) {
          if (g.edge(trail[j + len2 - 1]).target == to) out.push_back({{i, len1}, {j, len2}});
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relabeling and reversal

Relabeling relabel(const MarkedDigraph& g, std::span<const std::size_t> pi) {
  if (pi.size() != g.edge_count() || !is_permutation(pi)) {
    throw std::invalid_argument("relabel: pi must be a permutation of the edges");
  }
  std::vector<Edge> edges;
  edges.reserve(pi.size());
  std::vector<std::size_t> marked_order;
  for (const std::size_t old : pi) {
    edges.push_back(g.edge(old));
    if (g.edge(old).marked) marked_order.push_back(old);
  }
  // Ranks of the old marked indices in their new order.
  std::vector<std::size_t> ranks(marked_order.size());
  for (std::size_t i = 0; i < marked_order.size(); ++i) {
    ranks[i] = static_cast<std::size_t>(std::count_if(marked_order.begin(), marked_order.end(),
                                                      [&](std::size_t x) { return x < marked_order[i]; }));
  }
  return {MarkedDigraph(g.vertex_count(), g.start(), g.end(), std::move(edges)), sgn_perm(pi) * sgn_perm(ranks)};
}

int reversal_sign(std::size_t edge_count, std::size_t marked_count) {
  const std::size_t exponent = edge_count * (edge_count - (edge_count > 0 ? 1 : 0)) / 2 +
                               marked_count * (marked_count - (marked_count > 0 ? 1 : 0)) / 2;
  return (exponent & 1U) != 0 ? -1 : 1;
}

}  // namespace stdid
