#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minscaffold/complex.hpp"
#include "minscaffold/cycle.hpp"
#include "minscaffold/z2.hpp"

namespace minscaffold {

/// Edge annotation: a vector in Z2^beta1 per edge such that the XOR over a
/// cycle's edges is zero exactly for boundaries, and two cycles share it
/// exactly when they are homologous.
struct EdgeAnnotation {
  std::size_t beta1 = 0;
  std::vector<BitVector> per_edge;  // indexed by complex edge id

  BitVector of(const std::vector<std::uint32_t>& edges) const;
};

/// Spanning forest + reduction of the triangle boundaries restricted to the
/// non-forest edges. The non-pivot rows give the homology coordinates.
EdgeAnnotation annotate_edges(const FlagComplex2& cx);

/// Shortest-path tree from one root (exact Dijkstra). Among predecessors
/// giving the same distance the smallest vertex id wins.
struct ShortestPathTree {
  static constexpr VertexId kNone = static_cast<VertexId>(-1);

  VertexId root = 0;
  std::vector<std::int64_t> dist;
  std::vector<VertexId> pred;            // kNone for the root and unreached vertices
  std::vector<std::uint32_t> pred_edge;  // complex edge to pred
  std::vector<VertexId> branch;          // child of root on the path (root for itself)
  std::vector<VertexId> settle_order;    // reached vertices in Dijkstra order

  bool reached(VertexId v) const { return v == root || pred[v] != kNone; }
};

ShortestPathTree shortest_path_tree(const FlagComplex2& cx, VertexId root);

/// Horton candidate set: for every root and every edge (a, b) whose tree
/// paths from the root meet only at the root, the cycle
/// path(root, a) + (a, b) + path(b, root). Deduplicated, canonical order.
std::vector<Cycle> horton_candidates(const FlagComplex2& cx);

/// Homologous cycles of identical minimal length. `cycles.front()` is the
/// canonical representative (smallest edge set).
struct VariantSet {
  std::vector<Cycle> cycles;
  BitVector annotation;

  const Cycle& representative() const { return cycles.front(); }
};

/// Equal-length candidates from different homology classes competed in one
/// selection round; the canonical-order cycle was taken.
struct PathologyEvent {
  std::size_t round = 0;
  std::int64_t length = 0;
  std::size_t competing_classes = 0;
};

struct MinimalBasisWithDraws {
  std::size_t beta1 = 0;
  std::vector<VariantSet> variant_sets;  // one per basis element, selection order
  std::vector<PathologyEvent> pathologies;
  std::int64_t total_length = 0;  // sum of the minimal lengths, in length units
};

/// Minimal 1-homology basis with draw tracking (de Pina selection over the
/// annotated Horton candidates).
MinimalBasisWithDraws min_basis_with_draws(const FlagComplex2& cx);

}  // namespace minscaffold
