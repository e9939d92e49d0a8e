#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "minscaffold/graph.hpp"
#include "minscaffold/rational.hpp"

namespace minscaffold {

enum class Provenance { loose, minimal, minimal_with_draws };

const char* to_string(Provenance p);

/// Weighted subgraph of the input produced by stacking cycles. Only edges
/// with positive weight are stored.
struct Scaffold {
  std::size_t n_vertices = 0;
  std::map<std::pair<VertexId, VertexId>, Rational> edge_weights;
  Provenance provenance = Provenance::minimal;
  std::size_t pathology_events = 0;

  bool empty() const { return edge_weights.empty(); }
  Rational total_weight() const;

  friend bool operator==(const Scaffold&, const Scaffold&) = default;
};

enum class EssentialPolicy { include, exclude };

/// Edge weight = number of persistence generator cycles containing the edge.
Scaffold loose_scaffold(const Filtration& f, EssentialPolicy essential = EssentialPolicy::include);

/// Per-step record of the minimal basis computation.
struct StepSummary {
  std::size_t step = 0;
  std::size_t beta1 = 0;
  std::vector<std::size_t> variant_sizes;
  std::size_t pathology_events = 0;
  Rational total_length;  // sum of minimal cycle lengths at this step
};

struct MinimalScaffolds {
  Scaffold minimal;
  Scaffold with_draws;
  std::vector<StepSummary> steps;
};

/// Minimal basis with draws at every filtration step, run on `workers`
/// threads, then both scaffolds aggregated exactly. The result does not
/// depend on the worker count.
MinimalScaffolds minimal_scaffolds(const Filtration& f, std::size_t workers = 1);

/// Edge weight = number of (step, basis cycle) pairs containing the edge,
/// taking the canonical representative of each variant set.
Scaffold minimal_scaffold(const Filtration& f, std::size_t workers = 1);

/// Each variant set V contributes 1/|V| per member cycle per edge.
Scaffold minimal_scaffold_with_draws(const Filtration& f, std::size_t workers = 1);

/// Sum of incident scaffold weights, one entry per vertex.
std::vector<Rational> node_strength(const Scaffold& s);

struct RankedNode {
  VertexId vertex = 0;
  Rational strength;
  double relative_strength = 0.0;  // strength / mean strength over all vertices
};

/// Descending relative strength, ties by vertex id. Throws on an empty scaffold.
std::vector<RankedNode> rank_nodes(const Scaffold& s);

/// Scaffold viewed as a weighted graph (same vertex set).
WeightedGraph as_graph(const Scaffold& s);

}  // namespace minscaffold
