#include "stdid/bridge.hpp"

#include <random>
#include <stdexcept>

#include "stdid/errors.hpp"

namespace stdid {

SimplifiedSet graph_to_simplified(const MarkedDigraph& g, std::optional<unsigned> generators) {
  const std::size_t marked = g.marked_count();
  const unsigned m = generators.value_or(static_cast<unsigned>(marked));
  if (marked > m) {
    throw DimensionError("graph has " + std::to_string(marked) + " marked edges but E^" + std::to_string(m) +
                         " has fewer generators");
  }
  SimplifiedSet x{g.vertex_count(), m, {}, g.start(), g.end()};
  x.elements.reserve(g.edge_count());
  unsigned next_generator = 1;
  for (const Edge& e : g.edges()) {
    if (e.marked) {
      x.elements.push_back(GrassmannMatrix::unit(g.vertex_count(), m, e.source, e.target,
                                                 GrassmannElement::generator(m, next_generator++)));
    } else {
      x.elements.push_back(GrassmannMatrix::unit(g.vertex_count(), m, e.source, e.target));
    }
  }
  return x;
}

MarkedDigraph simplified_to_graph(const SimplifiedSet& x) {
  std::vector<Edge> edges;
  edges.reserve(x.elements.size());
  Mask used = 0;
  for (std::size_t i = 0; i < x.elements.size(); ++i) {
    const GrassmannMatrix& element = x.elements[i];
    if (element.size() != x.n || element.generators() != x.generators) {
      throw std::invalid_argument("simplified set element " + std::to_string(i + 1) + " has the wrong shape");
    }
    const auto basis = as_basis_element(element);
    if (!basis || basis->sign != 1 || mask_degree(basis->monomial) > 1) {
      throw std::invalid_argument("simplified set element " + std::to_string(i + 1) +
                                  " is neither E_ab nor v_i E_ab");
    }
    if ((used & basis->monomial) != 0) {
      throw std::invalid_argument("simplified set repeats a generator at element " + std::to_string(i + 1));
    }
    used |= basis->monomial;
    edges.push_back({basis->alpha, basis->beta, basis->monomial != 0});
  }
  // The generators must be exactly v_1..v_l.
  if ((used & (used + 1)) != 0) throw std::invalid_argument("simplified set generators are not v_1..v_l");
  return MarkedDigraph(x.n, x.start, x.end, std::move(edges));
}

CrossCheckReport cross_check(const MarkedDigraph& g, const StandardPolynomialOptions& poly,
                             const TrailOptions& trails) {
  const SimplifiedSet x = graph_to_simplified(g);
  const GrassmannMatrix value = standard_polynomial(x.elements, poly);

  CrossCheckReport report;
  report.entry = value(g.start(), g.end());
  report.magnitude = signed_sum(g, trails).magnitude;

  const std::size_t l = g.marked_count();
  const Mask top = l == 0 ? Mask{0} : static_cast<Mask>((std::uint64_t{1} << l) - 1);
  if (report.entry.is_zero()) {
    report.agrees = report.magnitude == 0;
    report.observed_sign = 0;
    return report;
  }
  for (const int sign : {1, -1}) {
    if (report.entry == GrassmannElement::monomial(x.generators, top, sign * report.magnitude)) {
      report.agrees = true;
      report.observed_sign = sign;
    }
  }
  return report;
}

IdentityVerdict identity_verdict(std::size_t n, std::size_t m, std::size_t k, SearchMode mode,
                                 const VerdictOptions& options) {
  IdentityVerdict verdict;
  auto check = [&](const MarkedDigraph& g) {
    ++verdict.graphs_checked;
    const SignedSumReport r = signed_sum(g, options.trails);
    if (r.magnitude != 0) {
      verdict.holds = false;
      verdict.witness = g;
      verdict.witness_magnitude = r.magnitude;
      return false;
    }
    return true;
  };

  if (mode == SearchMode::exhaustive) {
    const EnumerationReport report = enumerate_marked_graphs(n, k, m, check);
    verdict.skipped = report.skipped;
    return verdict;
  }

  std::mt19937_64 rng(options.seed);
  const RandomGraphShape shape{n, n, k, k, m};
  for (std::size_t i = 0; i < options.samples; ++i) {
    if (!check(random_balanced_graph(rng, shape))) break;
  }
  return verdict;
}

}  // namespace stdid
