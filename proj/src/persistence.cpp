#include "minscaffold/persistence.hpp"

#include <algorithm>

#include "minscaffold/z2.hpp"

namespace minscaffold {

std::size_t Barcode::count(int dim) const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [&](const PersistencePair& p) { return p.dim == dim; }));
}

std::size_t Barcode::alive_at(int dim, const Rational& eps) const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [&](const PersistencePair& p) {
    return p.dim == dim && p.alive_at(eps);
  }));
}

Barcode compute_persistence(const Filtration& f) {
  const FlagComplex2 cx = flag_complex_at(f, f.size() - 1);
  const auto edge_value = [&](std::uint32_t e) -> const Rational& {
    return f.threshold(cx.edges()[e].step);
  };

  Barcode barcode;

  // Dimension 0: vertices against edges.
  const TrackedReduction d1 = reduce_tracked(boundary_matrix(cx, 1), true);
  std::vector<bool> vertex_paired(cx.n_vertices(), false);
  for (std::uint32_t v = 0; v < cx.n_vertices(); ++v) {
    if (const auto& e = d1.pivot_column[v]) {
      vertex_paired[v] = true;
      const Rational& death = edge_value(*e);
      if (death > 0) barcode.pairs.push_back({0, Rational(0), death, std::nullopt});
    }
  }
  for (std::uint32_t v = 0; v < cx.n_vertices(); ++v) {
    if (!vertex_paired[v]) barcode.pairs.push_back({0, Rational(0), std::nullopt, std::nullopt});
  }

  // Dimension 1: edges against triangles.
  const TrackedReduction d2 = reduce_tracked(boundary_matrix(cx, 2), false);
  for (std::uint32_t e = 0; e < cx.n_edges(); ++e) {
    if (!d1.reduced[e].empty()) continue;  // negative edge, merged two components
    const Rational& birth = edge_value(e);
    if (const auto& t = d2.pivot_column[e]) {
      const Rational& death = f.threshold(cx.triangles()[*t].step);
      if (death == birth) continue;
      barcode.pairs.push_back({1, birth, death, make_cycle(cx, d2.reduced[*t].support())});
    } else {
      barcode.pairs.push_back({1, birth, std::nullopt, make_cycle(cx, d1.transform[e].support())});
    }
  }
  return barcode;
}

std::vector<Ph1Generator> ph1_generators(const Filtration& f) {
  std::vector<Ph1Generator> result;
  for (PersistencePair& p : compute_persistence(f).pairs) {
    if (p.dim != 1) continue;
    result.push_back({std::move(*p.generator), std::move(p.birth), std::move(p.death)});
  }
  return result;
}

std::size_t betti1_at(const FlagComplex2& cx) {
  const std::size_t cycles = cx.n_edges() + cx.connected_components() - cx.n_vertices();
  return cycles - rank(boundary_matrix(cx, 2));
}

}  // namespace minscaffold
