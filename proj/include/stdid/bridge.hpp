#ifndef STDID_BRIDGE_HPP
#define STDID_BRIDGE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stdid/digraph.hpp"
#include "stdid/grassmann.hpp"
#include "stdid/integer.hpp"
#include "stdid/trails.hpp"

namespace stdid {

/// Tuple x_1..x_k of M_n E^m where each x_i is E_{ab} or v_j E_{ab}, the
/// generators used being exactly v_1..v_l, together with roots (s, t).
struct SimplifiedSet {
  std::size_t n = 1;
  unsigned generators = 0;
  std::vector<GrassmannMatrix> elements;
  Vertex start = 1;
  Vertex end = 1;
};

/// Marked edge a_i becomes v_g E_{a_i^-, a_i^+}, g its rank within B; other
/// edges become plain matrix units. `generators` defaults to |B|.
/// Throws DimensionError when |B| exceeds it.
SimplifiedSet graph_to_simplified(const MarkedDigraph& g, std::optional<unsigned> generators = std::nullopt);

/// Inverse construction. Throws std::invalid_argument for elements outside the
/// simplified form, repeated generators, or generators not forming v_1..v_l.
MarkedDigraph simplified_to_graph(const SimplifiedSet& x);

struct CrossCheckReport {
  /// (s_k(x_1..x_k))_{s,t}.
  GrassmannElement entry;
  /// T(G,B) from trail enumeration.
  Integer magnitude;
  /// entry == sign * T * v_1...v_l for some sign in {+1, -1}.
  bool agrees = false;
  /// The sign when the entry is nonzero, 0 otherwise.
  int observed_sign = 0;
};

CrossCheckReport cross_check(const MarkedDigraph& g, const StandardPolynomialOptions& poly = {},
                             const TrailOptions& trails = {});

enum class SearchMode { exhaustive, sampled };

struct VerdictOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  TrailOptions trails;
};

struct IdentityVerdict {
  bool holds = true;
  std::optional<MarkedDigraph> witness;
  Integer witness_magnitude;
  std::size_t graphs_checked = 0;
  std::size_t skipped = 0;
};

/// Whether s_k is an identity of M_n E^m, decided through the graph side:
/// T(G,B) = 0 for every marked graph with n vertices, k edges and |B| <= m.
/// Exhaustive mode walks enumerate_marked_graphs and returns the first
/// witness in its order; sampled mode checks `samples` seeded random graphs.
IdentityVerdict identity_verdict(std::size_t n, std::size_t m, std::size_t k, SearchMode mode,
                                 const VerdictOptions& options = {});

}  // namespace stdid

#endif  // STDID_BRIDGE_HPP
