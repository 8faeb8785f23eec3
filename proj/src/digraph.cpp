#include "stdid/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stdid/random.hpp"

namespace stdid {

MarkedDigraph::MarkedDigraph(std::size_t vertex_count, Vertex start, Vertex end, std::vector<Edge> edges)
    : vertex_count_(vertex_count), start_(start), end_(end), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw std::invalid_argument("graph needs at least one vertex");
  auto in_range = [this](Vertex v) { return v >= 1 && v <= vertex_count_; };
  if (!in_range(start_) || !in_range(end_)) throw std::invalid_argument("root outside [1, n]");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!in_range(edges_[i].source) || !in_range(edges_[i].target)) {
      throw std::invalid_argument("edge " + std::to_string(i + 1) + " has an endpoint outside [1, n]");
    }
  }
}

std::vector<std::size_t> MarkedDigraph::marked_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].marked) out.push_back(i);
  }
  return out;
}

std::size_t MarkedDigraph::marked_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.marked; }));
}

namespace {

// Union-find over vertices 1..n (slot 0 unused).
struct Components {
  std::vector<std::size_t> parent;

  explicit Components(std::size_t n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

DegreeProfile validate(const MarkedDigraph& g) {
  const std::size_t n = g.vertex_count();
  DegreeProfile p;
  p.in_degree.assign(n, 0);
  p.out_degree.assign(n, 0);
  p.corrected_degree.assign(n, 0);

  Components components(n);
  for (const Edge& e : g.edges()) {
    ++p.out_degree[e.source - 1];
    ++p.in_degree[e.target - 1];
    components.join(e.source, e.target);
  }

  p.balanced = true;
  for (Vertex v = 1; v <= n; ++v) {
    const std::size_t in = p.in_degree[v - 1] + (v == g.start() ? 1 : 0);
    const std::size_t out = p.out_degree[v - 1] + (v == g.end() ? 1 : 0);
    p.corrected_degree[v - 1] = in;
    if (in != out) p.balanced = false;
  }

  const std::size_t root = components.find(g.start());
  p.connected = components.find(g.end()) == root;
  for (const Edge& e : g.edges()) {
    if (components.find(e.source) != root) p.connected = false;
  }
  return p;
}

std::size_t gn_edge_count(std::size_t n, std::size_t mbar) { return 2 * mbar + 4 * n - 5; }

MarkedDigraph make_gn(std::size_t n, std::size_t mbar) {
  if (n < 2) throw std::invalid_argument("make_gn: n must be at least 2");
  if (mbar < 1) throw std::invalid_argument("make_gn: mbar must be at least 1");

  std::vector<Edge> edges;
  edges.reserve(gn_edge_count(n, mbar));
  for (std::size_t l = 0; l < mbar; ++l) {
    edges.push_back({1, 2, true});
    edges.push_back({2, 1, true});
  }
  edges.push_back({1, 1, false});
  edges.push_back({1, 2, false});
  for (Vertex h = 3; h <= n; ++h) {
    edges.push_back({h - 1, h, false});
    edges.push_back({h, 1, false});
    edges.push_back({1, h, false});
    edges.push_back({h, h - 1, false});
  }
  edges.push_back({n, n, false});
  return MarkedDigraph(n, 1, 2, std::move(edges));
}

MarkedDigraph extend(const MarkedDigraph& g) {
  const Vertex r = g.vertex_count() + 1;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 2);
  edges.push_back({r, g.start(), false});
  edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  edges.push_back({g.end(), r, false});
  return MarkedDigraph(r, r, r, std::move(edges));
}

MarkedDigraph restrict_extended(const MarkedDigraph& g) {
  const Vertex r = g.vertex_count();
  const auto& edges = g.edges();
  if (r < 2 || edges.size() < 2 || g.start() != r || g.end() != r) {
    throw std::invalid_argument("restrict_extended: not an extended graph");
  }
  const Edge& first = edges.front();
  const Edge& last = edges.back();
  if (first.source != r || first.target == r || last.target != r || last.source == r) {
    throw std::invalid_argument("restrict_extended: virtual edges are not (r, x) first and (y, r) last");
  }
  std::vector<Edge> inner(edges.begin() + 1, edges.end() - 1);
  for (const Edge& e : inner) {
    if (e.source == r || e.target == r) throw std::invalid_argument("restrict_extended: inner edge touches r");
  }
  return MarkedDigraph(r - 1, first.target, last.source, std::move(inner));
}

MarkedDigraph opposite(const MarkedDigraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) std::swap(e.source, e.target);
  return MarkedDigraph(g.vertex_count(), g.end(), g.start(), std::move(edges));
}

namespace {

void require_surgery_edges(const MarkedDigraph& g, std::size_t a, std::size_t other, const char* name) {
  if (a >= g.edge_count() || other >= g.edge_count()) {
    throw std::invalid_argument(std::string(name) + ": edge index out of range");
  }
  if (g.edge(a).is_loop()) throw std::invalid_argument(std::string(name) + ": a must not be a loop");
  if (a == other) throw std::invalid_argument(std::string(name) + ": edges must be distinct");
}

}  // namespace

MarkedDigraph surgery_in(const MarkedDigraph& g, std::size_t a, std::size_t c) {
  require_surgery_edges(g, a, c, "surgery_in");
  const Edge ea = g.edge(a);
  if (g.edge(c).target != ea.source) throw std::invalid_argument("surgery_in: c must end where a starts");
  std::vector<Edge> edges = g.edges();
  edges[a] = {ea.target, ea.target, ea.marked};
  edges[c].target = ea.target;
  return MarkedDigraph(g.vertex_count(), g.start(), g.end(), std::move(edges));
}

MarkedDigraph surgery_out(const MarkedDigraph& g, std::size_t a, std::size_t d) {
  require_surgery_edges(g, a, d, "surgery_out");
  const Edge ea = g.edge(a);
  if (g.edge(d).source != ea.target) throw std::invalid_argument("surgery_out: d must start where a ends");
  std::vector<Edge> edges = g.edges();
  edges[a] = {ea.target, ea.target, ea.marked};
  edges[d].source = ea.source;
  return MarkedDigraph(g.vertex_count(), g.start(), g.end(), std::move(edges));
}

CanonicalKey canonical_key(const MarkedDigraph& g) {
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end());
  return {std::move(sorted), g.start(), g.end()};
}

EnumerationReport enumerate_marked_graphs(std::size_t n, std::size_t k, std::size_t bmax,
                                          const std::function<bool(const MarkedDigraph&)>& visit) {
  if (n < 1 || k < 1) throw std::invalid_argument("enumerate_marked_graphs: n and k must be positive");

  // Edge types in sorted order; a class is a non-decreasing sequence of types.
  std::vector<Edge> types;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      types.push_back({u, v, false});
      types.push_back({u, v, true});
    }
  }

  EnumerationReport report;
  std::vector<std::size_t> choice(k, 0);
  std::vector<Edge> edges(k);

  // Depth-first over non-decreasing type sequences, bounded marked count.
  std::function<bool(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t depth, std::size_t lowest,
                                                                        std::size_t marked) -> bool {
    if (depth == k) {
      for (Vertex s = 1; s <= n; ++s) {
        for (Vertex t = 1; t <= n; ++t) {
          MarkedDigraph g(n, s, t, edges);
          if (!validate(g).admits_trail()) {
            ++report.skipped;
            continue;
          }
          ++report.yielded;
          if (!visit(g)) return false;
        }
      }
      return true;
    }
    for (std::size_t type = lowest; type < types.size(); ++type) {
      const std::size_t next_marked = marked + (types[type].marked ? 1 : 0);
      if (next_marked > bmax) continue;
      edges[depth] = types[type];
      if (!walk(depth + 1, type, next_marked)) return false;
    }
    return true;
  };
  report.stopped = !walk(0, 0, 0);
  return report;
}

}  // namespace stdid

namespace stdid {

MarkedDigraph random_balanced_graph(std::mt19937_64& rng, const RandomGraphShape& shape) {
  if (shape.min_vertices < 1 || shape.min_vertices > shape.max_vertices || shape.min_edges < 1 ||
      shape.min_edges > shape.max_edges) {
    throw std::invalid_argument("random_balanced_graph: empty shape range");
  }
  constexpr std::size_t kMaxAttempts = 10'000'000;
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t n = draw_uniform(rng, shape.min_vertices, shape.max_vertices);
    const std::size_t k = draw_uniform(rng, shape.min_edges, shape.max_edges);
    std::vector<Edge> edges(k);
    for (Edge& e : edges) {
      e.source = draw_uniform(rng, 1, n);
      e.target = draw_uniform(rng, 1, n);
    }
    const Vertex s = draw_uniform(rng, 1, n);
    const Vertex t = draw_uniform(rng, 1, n);
    // Partial Fisher-Yates picks the marked subset.
    const std::size_t marked = draw_uniform(rng, 0, std::min(shape.max_marked, k));
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < marked; ++i) {
      std::swap(order[i], order[draw_uniform(rng, i, k - 1)]);
      edges[order[i]].marked = true;
    }
    MarkedDigraph g(n, s, t, std::move(edges));
    if (validate(g).admits_trail()) return g;
  }
  throw std::runtime_error("random_balanced_graph: no balanced graph found");
}

}  // namespace stdid
