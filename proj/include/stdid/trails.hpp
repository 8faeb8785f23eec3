#ifndef STDID_TRAILS_HPP
#define STDID_TRAILS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stdid/digraph.hpp"
#include "stdid/integer.hpp"
#include "stdid/permutation.hpp"

namespace stdid {

/// Edge indices (0-based) in trail order: (sigma(1), ..., sigma(k)).
using TrailPermutation = std::vector<std::size_t>;

struct TrailOptions {
  /// Maximum number of visited search nodes; exceeding it throws BudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
  /// Workers for signed sums; the search is split on the first two trail
  /// positions. Streaming enumeration is always sequential.
  unsigned threads = 1;
};

/// Called once per Eulerian trail with sgn(sigma) and sgn(sigma_M).
using TrailVisitor = std::function<void(const TrailPermutation&, int sign, int marked_sign)>;

/// Visits every Eulerian trail from start to end exactly once, in
/// lexicographic order of the edge sequence. Graphs without a trail visit
/// nothing. Supports at most 64 edges.
void enumerate_trails(const MarkedDigraph& g, const TrailVisitor& visit, const TrailOptions& options = {});

std::vector<TrailPermutation> list_trails(const MarkedDigraph& g, const TrailOptions& options = {});

bool is_eulerian_trail(const MarkedDigraph& g, std::span<const std::size_t> trail);

/// sgn(sigma_M) for the trail: the sigma_m rule applied to the inverse trail
/// permutation (edge -> position), i.e. the sign of the order in which the
/// marked edges are traversed.
int marked_sign(const MarkedDigraph& g, std::span<const std::size_t> trail);

struct SignedSumReport {
  Integer signed_sum;  // S(G,B)
  Integer magnitude;   // T(G,B) = |S|
  Integer trail_count; // |P(G)|
  std::uint64_t visited_nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// S(G,B) = sum over Eulerian trails of sgn(sigma) sgn(sigma_M). The result
/// does not depend on options.threads.
SignedSumReport signed_sum(const MarkedDigraph& g, const TrailOptions& options = {});

// Trail constraints. Edge indices and positions are 0-based.

/// The edges occur consecutively, in this order.
struct Subtrail {
  std::vector<std::size_t> edges;
};

/// Both sequences occur as subtrails and the first ends before the second starts.
struct Precedes {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

struct AtPosition {
  std::size_t edge = 0;
  std::size_t position = 0;
};

using TrailConstraint = std::variant<Subtrail, Precedes, AtPosition>;

bool satisfies(std::span<const std::size_t> trail, const TrailConstraint& constraint);

/// Parses the command-line grammar (1-based indices):
///   subtrail:3,5,2   precedes:1,2|4   at:4@7
/// Throws FormatError.
TrailConstraint parse_constraint(const std::string& text);
std::string format_constraint(const TrailConstraint& constraint);

/// s(P', M(B)) over the trails satisfying every constraint.
Integer filtered_signed_sum(const MarkedDigraph& g, std::span<const TrailConstraint> constraints,
                            const TrailOptions& options = {});

/// Positions [start, start + length) of a trail.
struct Occurrence {
  std::size_t start = 0;
  std::size_t length = 1;
};

struct SwapResult {
  TrailPermutation trail;
  /// Predicted sgn(swapped) / sgn(original).
  int predicted_sign = 1;
  /// Predicted sgn(swapped_M) / sgn(original_M).
  int predicted_marked_sign = 1;
};

/// Exchanges two disjoint parallel subtrails (same start vertex, same end
/// vertex). With h edges (h' marked) strictly between them:
///   sign factor (-1)^(|q1|(h+|q2|) + h|q2|), marked factor likewise with the
///   marked counts.
/// Throws std::invalid_argument when the occurrences overlap, fall outside
/// the trail, or are not parallel.
SwapResult swap_parallel_subtrails(const MarkedDigraph& g, std::span<const std::size_t> trail, Occurrence q1,
                                   Occurrence q2);

/// Every pair of disjoint parallel occurrences (first before second) in a trail.
std::vector<std::pair<Occurrence, Occurrence>> parallel_occurrence_pairs(const MarkedDigraph& g,
                                                                         std::span<const std::size_t> trail);

struct Relabeling {
  MarkedDigraph graph;
  /// S(graph) = sign_relation * S(original): sgn(pi) times the sign of the
  /// order the marked edges take in the new enumeration.
  int sign_relation = 1;
};

/// New edge i is old edge pi[i]; marks travel with their edges.
/// Throws std::invalid_argument unless pi is a permutation of the edges.
Relabeling relabel(const MarkedDigraph& g, std::span<const std::size_t> pi);

/// S(G^op, B) = reversal_sign(k, |B|) * S(G, B), namely
/// (-1)^(k(k-1)/2 + b(b-1)/2).
int reversal_sign(std::size_t edge_count, std::size_t marked_count);

}  // namespace stdid

#endif  // STDID_TRAILS_HPP
