#ifndef STDID_DIGRAPH_HPP
#define STDID_DIGRAPH_HPP

#include <cstddef>
#include <functional>
#include <random>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

namespace stdid {

/// Vertices are numbered 1..n.
using Vertex = std::size_t;

struct Edge {
  Vertex source = 1;
  Vertex target = 1;
  /// Membership in the marked subset B.
  bool marked = false;

  bool is_loop() const { return source == target; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Doubly-rooted directed multigraph with a marked edge subset.
///
/// The edge order is the enumeration a_1..a_k; it fixes the sign of every
/// trail permutation. Edges are addressed 0-based in the API and rendered
/// 1-based in text output.
class MarkedDigraph {
 public:
  /// Throws std::invalid_argument when a root or endpoint is outside [1, n].
  MarkedDigraph(std::size_t vertex_count, Vertex start, Vertex end, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  Vertex start() const { return start_; }
  Vertex end() const { return end_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  /// M(B): 0-based indices of the marked edges, ascending.
  std::vector<std::size_t> marked_indices() const;
  std::size_t marked_count() const;

  friend bool operator==(const MarkedDigraph&, const MarkedDigraph&) = default;

 private:
  std::size_t vertex_count_;
  Vertex start_;
  Vertex end_;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  /// Indexed by vertex - 1.
  std::vector<std::size_t> in_degree;
  std::vector<std::size_t> out_degree;
  /// in_degree + [v == start]; equals out_degree + [v == end] when balanced.
  std::vector<std::size_t> corrected_degree;
  bool balanced = false;
  /// The roots and every edge endpoint lie in one weakly connected component.
  bool connected = false;

  /// Necessary and sufficient for an Eulerian trail from start to end.
  bool admits_trail() const { return balanced && connected; }
};

DegreeProfile validate(const MarkedDigraph& g);

/// The witness family G_n with m = 2*mbar marked edges a_1..a_m and roots (1,2).
MarkedDigraph make_gn(std::size_t n, std::size_t mbar);

/// Number of edges of make_gn(n, mbar): 2*mbar + 4n - 5.
std::size_t gn_edge_count(std::size_t n, std::size_t mbar);

/// G*: new vertex r = n + 1, edge (r, s) first, edge (t, r) last, roots (r, r).
MarkedDigraph extend(const MarkedDigraph& g);

/// Inverse of extend on graphs of that shape: drops vertex n and its two
/// edges, taking the new roots from their other endpoints. Works on surgered
/// extensions too, where it yields e.g. G_{a,a_0} with roots (a^+, t).
MarkedDigraph restrict_extended(const MarkedDigraph& g);

/// Reverses every edge in place and swaps the roots; B is unchanged.
MarkedDigraph opposite(const MarkedDigraph& g);

/// G_{a,c}: a becomes the loop at a^+ and c becomes (c^-, a^+); indices and
/// marks are kept. Requires a not a loop, c != a and c^+ == a^-.
MarkedDigraph surgery_in(const MarkedDigraph& g, std::size_t a, std::size_t c);

/// G^{a,d}: a becomes the loop at a^+ and d becomes (a^-, d^+). Requires a
/// not a loop, d != a and d^- == a^+.
MarkedDigraph surgery_out(const MarkedDigraph& g, std::size_t a, std::size_t d);

/// Sorted (source, target, marked) triples plus roots; equal keys mean the
/// graphs differ only by edge enumeration.
using CanonicalKey = std::tuple<std::vector<Edge>, Vertex, Vertex>;
CanonicalKey canonical_key(const MarkedDigraph& g);

struct EnumerationReport {
  std::size_t yielded = 0;
  /// Classes dropped because they admit no Eulerian trail.
  std::size_t skipped = 0;
  /// The visitor asked to stop early.
  bool stopped = false;
};

/// Visits one representative per class of marked graphs with `n` vertices,
/// `k` edges and at most `bmax` marked edges, skipping classes without an
/// Eulerian trail. Representatives list their edges in sorted order; classes
/// are visited in lexicographic order of (edge multiset, start, end). The
/// visitor returns false to stop.
EnumerationReport enumerate_marked_graphs(std::size_t n, std::size_t k, std::size_t bmax,
                                          const std::function<bool(const MarkedDigraph&)>& visit);

struct RandomGraphShape {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 3;
  std::size_t min_edges = 1;
  std::size_t max_edges = 7;
  std::size_t max_marked = 3;
};

/// Rejection sampler: uniform vertex count, edge count, edge endpoints, roots
/// and marked subset (size uniform in [0, max_marked]), retried until the
/// graph admits an Eulerian trail. Deterministic for a given engine state.
MarkedDigraph random_balanced_graph(std::mt19937_64& rng, const RandomGraphShape& shape);

// Graph text format:
//   n <n> s <s> t <t>
//   <source> <target> <0|1>      one line per edge, in enumeration order
// '#' starts a comment; blank lines are ignored.

/// Throws FormatError carrying the offending line number.
MarkedDigraph parse_graph(std::istream& in);
MarkedDigraph parse_graph(const std::string& text);
MarkedDigraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const MarkedDigraph& g);
std::string format_graph(const MarkedDigraph& g);

}  // namespace stdid

#endif  // STDID_DIGRAPH_HPP
