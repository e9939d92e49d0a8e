#pragma once

#include <string>
#include <vector>

#include "minscaffold/graph.hpp"

namespace fixtures {

using minscaffold::Edge;
using minscaffold::Rational;
using minscaffold::WeightedGraph;

inline Rational sqrt2() { return minscaffold::quantize_decimal(1.4142135623730951, 12); }

/// Corners of the unit square 0=(0,0) 1=(1,0) 2=(1,1) 3=(0,1) with Euclidean weights.
inline WeightedGraph unit_square() {
  return WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 2, sqrt2()}, {1, 3, sqrt2()}});
}

/// Filled diamond L=0 T=1 R=2 B=3 (diagonal T-B) inside the hexagonal
/// hole L-T-R-x-y-z with x=4 y=5 z=6. Unit weights: the two halves of the
/// diamond give two equal-length homologous cycles around the hole.
inline WeightedGraph half_weight_diamond() {
  return WeightedGraph(7, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 2, 1}, {1, 3, 1},
                           {2, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 0, 1}});
}

/// Theta graph s=0 t=2 with paths s-a-t (a=1), s-b-t (b=3), s-c-d-t
/// (c=4, d=5), unit weights. Cycle lengths 4, 5, 5.
inline WeightedGraph theta() {
  return WeightedGraph(6, {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 2, 1}, {0, 4, 1}, {4, 5, 1}, {5, 2, 1}});
}

inline WeightedGraph cycle_graph(std::size_t n, const Rational& w = 1) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<minscaffold::VertexId>(i),
                     static_cast<minscaffold::VertexId>((i + 1) % n), w});
  }
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph complete_graph(std::size_t n, const Rational& w = 1) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<minscaffold::VertexId>(i), static_cast<minscaffold::VertexId>(j), w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace fixtures
