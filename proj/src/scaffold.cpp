#include "minscaffold/scaffold.hpp"

#include <algorithm>
#include <stdexcept>

#include "minscaffold/complex.hpp"
#include "minscaffold/minbasis.hpp"
#include "minscaffold/parallel.hpp"
#include "minscaffold/persistence.hpp"

namespace minscaffold {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::loose: return "loose";
    case Provenance::minimal: return "minimal";
    case Provenance::minimal_with_draws: return "minimal_with_draws";
  }
  return "unknown";
}

Rational Scaffold::total_weight() const {
  Rational total = 0;
  for (const auto& [edge, w] : edge_weights) total += w;
  return total;
}

namespace {

Scaffold from_counts(const WeightedGraph& g, const std::vector<Rational>& weights, Provenance p) {
  Scaffold s;
  s.n_vertices = g.n_vertices();
  s.provenance = p;
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] > 0) s.edge_weights.emplace(std::pair{g.edge(e).u, g.edge(e).v}, weights[e]);
  }
  return s;
}

struct StepResult {
  StepSummary summary;
  std::vector<EdgeIndex> representative_edges;  // graph edge ids, with multiplicity
  // (graph edge id, |V|) once per member cycle containing the edge
  std::vector<std::pair<EdgeIndex, std::uint32_t>> draw_edges;
};

}  // namespace

Scaffold loose_scaffold(const Filtration& f, EssentialPolicy essential) {
  const FlagComplex2 cx = flag_complex_at(f, f.size() - 1);
  std::vector<Rational> weights(f.graph().n_edges(), Rational(0));
  for (const Ph1Generator& g : ph1_generators(f)) {
    if (essential == EssentialPolicy::exclude && !g.death) continue;
    for (std::uint32_t e : g.cycle.edges) weights[cx.edges()[e].graph_edge] += 1;
  }
  return from_counts(f.graph(), weights, Provenance::loose);
}

MinimalScaffolds minimal_scaffolds(const Filtration& f, std::size_t workers) {
  std::vector<StepResult> results(f.size());
  parallel_for(f.size(), workers, [&](std::size_t step) {
    const FlagComplex2 cx = flag_complex_at(f, step);
    const MinimalBasisWithDraws basis = min_basis_with_draws(cx);
    StepResult& out = results[step];
    out.summary.step = step;
    out.summary.beta1 = basis.beta1;
    out.summary.pathology_events = basis.pathologies.size();
    out.summary.total_length = cx.length_of_units(basis.total_length);
    for (const VariantSet& v : basis.variant_sets) {
      out.summary.variant_sizes.push_back(v.cycles.size());
      for (std::uint32_t e : v.representative().edges) {
        out.representative_edges.push_back(cx.edges()[e].graph_edge);
      }
      const auto size = static_cast<std::uint32_t>(v.cycles.size());
      for (const Cycle& c : v.cycles) {
        for (std::uint32_t e : c.edges) out.draw_edges.emplace_back(cx.edges()[e].graph_edge, size);
      }
    }
  });

  const std::size_t n_edges = f.graph().n_edges();
  std::vector<Rational> minimal(n_edges, Rational(0));
  // Draw contributions grouped by denominator, summed exactly at the end.
  std::map<std::uint32_t, std::vector<std::int64_t>> draw_counts;
  MinimalScaffolds out;
  std::size_t pathologies = 0;
  for (StepResult& r : results) {
    for (EdgeIndex e : r.representative_edges) minimal[e] += 1;
    for (const auto& [e, size] : r.draw_edges) {
      auto& counts = draw_counts[size];
      if (counts.empty()) counts.assign(n_edges, 0);
      ++counts[e];
    }
    pathologies += r.summary.pathology_events;
    out.steps.push_back(std::move(r.summary));
  }
  std::vector<Rational> draws(n_edges, Rational(0));
  for (const auto& [size, counts] : draw_counts) {
    for (std::size_t e = 0; e < n_edges; ++e) {
      if (counts[e]) draws[e] += Rational(counts[e], size);
    }
  }
  out.minimal = from_counts(f.graph(), minimal, Provenance::minimal);
  out.with_draws = from_counts(f.graph(), draws, Provenance::minimal_with_draws);
  out.minimal.pathology_events = pathologies;
  out.with_draws.pathology_events = pathologies;
  return out;
}

Scaffold minimal_scaffold(const Filtration& f, std::size_t workers) {
  return minimal_scaffolds(f, workers).minimal;
}

Scaffold minimal_scaffold_with_draws(const Filtration& f, std::size_t workers) {
  return minimal_scaffolds(f, workers).with_draws;
}

std::vector<Rational> node_strength(const Scaffold& s) {
  std::vector<Rational> strength(s.n_vertices, Rational(0));
  for (const auto& [edge, w] : s.edge_weights) {
    strength.at(edge.first) += w;
    strength.at(edge.second) += w;
  }
  return strength;
}

std::vector<RankedNode> rank_nodes(const Scaffold& s) {
  if (s.empty()) throw std::invalid_argument("cannot rank nodes of an empty scaffold");
  const std::vector<Rational> strength = node_strength(s);
  Rational mean = 0;
  for (const Rational& x : strength) mean += x;
  mean /= static_cast<long long>(s.n_vertices);

  std::vector<RankedNode> ranked;
  ranked.reserve(strength.size());
  for (VertexId v = 0; v < strength.size(); ++v) {
    ranked.push_back({v, strength[v], to_double(Rational(strength[v] / mean))});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedNode& a, const RankedNode& b) {
    if (a.strength != b.strength) return a.strength > b.strength;
    return a.vertex < b.vertex;
  });
  return ranked;
}

WeightedGraph as_graph(const Scaffold& s) {
  std::vector<Edge> edges;
  edges.reserve(s.edge_weights.size());
  for (const auto& [edge, w] : s.edge_weights) edges.push_back({edge.first, edge.second, w});
  return WeightedGraph(s.n_vertices, std::move(edges));
}

}  // namespace minscaffold
