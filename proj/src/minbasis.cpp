#include "minscaffold/minbasis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace minscaffold {

BitVector EdgeAnnotation::of(const std::vector<std::uint32_t>& edges) const {
  BitVector result(beta1);
  for (std::uint32_t e : edges) result ^= per_edge.at(e);
  return result;
}

EdgeAnnotation annotate_edges(const FlagComplex2& cx) {
  const std::size_t n_edges = cx.n_edges();

  // Spanning forest in complex edge order.
  std::vector<VertexId> parent(cx.n_vertices());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  constexpr std::uint32_t kTree = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> row_of_edge(n_edges, kTree);
  std::uint32_t n_rows = 0;
  for (std::uint32_t e = 0; e < n_edges; ++e) {
    const VertexId a = find(cx.edges()[e].u), b = find(cx.edges()[e].v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    } else {
      row_of_edge[e] = n_rows++;
    }
  }

  // Triangle boundaries in the coordinates of the non-forest edges: a
  // cycle is determined by its non-forest edges.
  Z2Matrix boundaries{n_rows, {}};
  boundaries.columns.reserve(cx.n_triangles());
  for (const ComplexTriangle& t : cx.triangles()) {
    std::vector<std::uint32_t> rows;
    for (std::uint32_t e : t.edges) {
      if (row_of_edge[e] != kTree) rows.push_back(row_of_edge[e]);
    }
    boundaries.columns.emplace_back(std::move(rows));
  }
  const TrackedReduction red = reduce_tracked(boundaries, false);
  const std::size_t rank_b = static_cast<std::size_t>(std::count_if(
      red.pivot_column.begin(), red.pivot_column.end(), [](const auto& p) { return p.has_value(); }));

  EdgeAnnotation ann;
  ann.beta1 = n_rows - rank_b;

  // Rows in increasing order: a pivot row r is equivalent, modulo
  // boundaries, to the sum of the other (smaller) rows of its column.
  std::vector<BitVector> row_ann(n_rows, BitVector(ann.beta1));
  std::size_t next_coordinate = 0;
  for (std::uint32_t r = 0; r < n_rows; ++r) {
    if (const auto& col = red.pivot_column[r]) {
      for (std::uint32_t s : red.reduced[*col].support()) {
        if (s != r) row_ann[r] ^= row_ann[s];
      }
    } else {
      row_ann[r].set(next_coordinate++);
    }
  }

  ann.per_edge.assign(n_edges, BitVector(ann.beta1));
  for (std::uint32_t e = 0; e < n_edges; ++e) {
    if (row_of_edge[e] != kTree) ann.per_edge[e] = row_ann[row_of_edge[e]];
  }
  return ann;
}

ShortestPathTree shortest_path_tree(const FlagComplex2& cx, VertexId root) {
  const std::size_t n = cx.n_vertices();
  ShortestPathTree tree;
  tree.root = root;
  tree.dist.assign(n, 0);
  tree.pred.assign(n, ShortestPathTree::kNone);
  tree.pred_edge.assign(n, 0);
  tree.branch.assign(n, ShortestPathTree::kNone);

  std::vector<bool> seen(n, false), settled(n, false);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  seen[root] = true;
  heap.push({0, root});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u] || d != tree.dist[u]) continue;
    settled[u] = true;
    tree.settle_order.push_back(u);
    tree.branch[u] = (u == root) ? root : (tree.pred[u] == root ? u : tree.branch[tree.pred[u]]);
    for (const auto& [w, e] : cx.neighbors(u)) {
      if (settled[w]) continue;
      const std::int64_t nd = d + cx.edges()[e].length;
      if (!seen[w] || nd < tree.dist[w]) {
        seen[w] = true;
        tree.dist[w] = nd;
        tree.pred[w] = u;
        tree.pred_edge[w] = e;
        heap.push({nd, w});
      } else if (nd == tree.dist[w] && u < tree.pred[w]) {
        tree.pred[w] = u;
        tree.pred_edge[w] = e;
      }
    }
  }
  return tree;
}

namespace {

struct EdgeSetHash {
  std::size_t operator()(const std::vector<std::uint32_t>& edges) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t e : edges) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct AnnotatedCycle {
  Cycle cycle;
  BitVector annotation;
};

void append_path(const ShortestPathTree& tree, VertexId v, std::vector<std::uint32_t>& out) {
  while (v != tree.root) {
    out.push_back(tree.pred_edge[v]);
    v = tree.pred[v];
  }
}

/// Enumerates Horton cycles. With an annotation, only cycles with a non-zero
/// class are produced (the others cannot enter a homology basis).
std::vector<AnnotatedCycle> collect_candidates(const FlagComplex2& cx, const EdgeAnnotation* ann) {
  std::vector<AnnotatedCycle> result;
  std::unordered_set<std::vector<std::uint32_t>, EdgeSetHash> seen;
  std::vector<BitVector> root_ann;
  std::vector<std::uint32_t> edges;

  for (VertexId root = 0; root < cx.n_vertices(); ++root) {
    if (cx.neighbors(root).size() < 2) continue;  // every cycle through root uses two of its edges
    const ShortestPathTree tree = shortest_path_tree(cx, root);
    if (ann) {
      root_ann.assign(cx.n_vertices(), BitVector(ann->beta1));
      for (VertexId v : tree.settle_order) {
        if (v == root) continue;
        root_ann[v] = root_ann[tree.pred[v]] ^ ann->per_edge[tree.pred_edge[v]];
      }
    }
    for (std::uint32_t e = 0; e < cx.n_edges(); ++e) {
      const ComplexEdge& edge = cx.edges()[e];
      const VertexId a = edge.u, b = edge.v;
      if (!tree.reached(a) || !tree.reached(b)) continue;
      if ((a != root && tree.pred_edge[a] == e) || (b != root && tree.pred_edge[b] == e)) continue;
      if (tree.branch[a] == tree.branch[b]) continue;

      BitVector annotation;
      if (ann) {
        annotation = root_ann[a] ^ root_ann[b] ^ ann->per_edge[e];
        if (!annotation.any()) continue;
      }
      edges.clear();
      append_path(tree, a, edges);
      append_path(tree, b, edges);
      edges.push_back(e);
      std::sort(edges.begin(), edges.end());
      if (!seen.insert(edges).second) continue;
      const std::int64_t length = tree.dist[a] + tree.dist[b] + edge.length;
      result.push_back({Cycle{edges, length}, std::move(annotation)});
    }
  }
  std::sort(result.begin(), result.end(), [](const AnnotatedCycle& x, const AnnotatedCycle& y) {
    return canonical_less(x.cycle, y.cycle);
  });
  return result;
}

}  // namespace

std::vector<Cycle> horton_candidates(const FlagComplex2& cx) {
  std::vector<Cycle> cycles;
  for (AnnotatedCycle& c : collect_candidates(cx, nullptr)) cycles.push_back(std::move(c.cycle));
  return cycles;
}

MinimalBasisWithDraws min_basis_with_draws(const FlagComplex2& cx) {
  MinimalBasisWithDraws basis;
  const EdgeAnnotation ann = annotate_edges(cx);
  basis.beta1 = ann.beta1;
  if (ann.beta1 == 0) return basis;

  const std::vector<AnnotatedCycle> candidates = collect_candidates(cx, &ann);

  // Support vectors start as the standard basis; after round i every S_j
  // (j > i) is orthogonal to the classes chosen so far.
  std::vector<BitVector> support(ann.beta1, BitVector(ann.beta1));
  for (std::size_t i = 0; i < ann.beta1; ++i) support[i].set(i);

  for (std::size_t round = 0; round < ann.beta1; ++round) {
    const BitVector& s = support[round];
    std::size_t first = 0;
    while (first < candidates.size() && !candidates[first].annotation.dot(s)) ++first;
    if (first == candidates.size()) {
      throw std::logic_error("candidate set does not span H1; annotation is inconsistent");
    }
    const std::int64_t best = candidates[first].cycle.length;
    const BitVector& chosen = candidates[first].annotation;

    VariantSet variants;
    variants.annotation = chosen;
    variants.cycles.push_back(candidates[first].cycle);
    std::vector<BitVector> rival_classes;
    for (std::size_t q = first + 1; q < candidates.size() && candidates[q].cycle.length == best; ++q) {
      const AnnotatedCycle& c = candidates[q];
      if (!c.annotation.dot(s)) continue;
      if (c.annotation == chosen) {
        variants.cycles.push_back(c.cycle);
      } else if (std::find(rival_classes.begin(), rival_classes.end(), c.annotation) ==
                 rival_classes.end()) {
        rival_classes.push_back(c.annotation);
      }
    }
    if (!rival_classes.empty()) {
      basis.pathologies.push_back({round, best, rival_classes.size() + 1});
    }

    for (std::size_t j = round + 1; j < ann.beta1; ++j) {
      if (chosen.dot(support[j])) support[j] ^= support[round];
    }
    basis.total_length += best;
    basis.variant_sets.push_back(std::move(variants));
  }
  return basis;
}

}  // namespace minscaffold
