#pragma once

#include <numeric>
#include <set>
#include <vector>

#include "minscaffold/graph.hpp"
#include "minscaffold/randnet.hpp"

namespace random_graphs {

using namespace minscaffold;

/// Connected graphs with 4..8 vertices and at most 14 edges: a random
/// spanning tree plus random chords. Weights are k/100; `ties` draws them
/// from a handful of values, otherwise they are distinct.
inline std::vector<WeightedGraph> small_connected(std::size_t count, std::uint64_t seed, bool ties) {
  CounterRng rng(seed);
  std::vector<WeightedGraph> out;
  while (out.size() < count) {
    const std::size_t n = 4 + rng.below(5);
    const std::size_t max_edges = std::min<std::size_t>(14, n * (n - 1) / 2);
    const std::size_t m = n - 1 + rng.below(max_edges - (n - 1) + 1);
    std::set<std::pair<VertexId, VertexId>> pairs;
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    rng.shuffle(order);
    for (std::size_t i = 1; i < n; ++i) {
      const VertexId a = order[i], b = order[rng.below(i)];
      pairs.insert({std::min(a, b), std::max(a, b)});
    }
    while (pairs.size() < m) {
      const auto a = static_cast<VertexId>(rng.below(n)), b = static_cast<VertexId>(rng.below(n));
      if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<long long> used;
    std::vector<Edge> edges;
    for (const auto& [a, b] : pairs) {
      long long k;
      if (ties) {
        k = 100 * static_cast<long long>(1 + rng.below(3));
      } else {
        do {
          k = 1 + static_cast<long long>(rng.below(1000));
        } while (!used.insert(k).second);
      }
      edges.push_back({a, b, Rational(k, 100)});
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace random_graphs
