#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "minscaffold/complex.hpp"
#include "minscaffold/cycle.hpp"
#include "minscaffold/minbasis.hpp"
#include "minscaffold/randnet.hpp"
#include "oracle.hpp"
#include "random_graphs.hpp"

using namespace minscaffold;

namespace {

FlagComplex2 final_complex(const WeightedGraph& g) {
  const Filtration f = build_filtration(g);
  return flag_complex_at(f, f.size() - 1);
}

}  // namespace

TEST_SUITE("minbasis") {

TEST_CASE("annotation kills boundaries and spans H1") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const FlagComplex2 cx = final_complex(gen_rgg(14, 0.45, 2, seed));
    const EdgeAnnotation ann = annotate_edges(cx);
    CHECK(ann.beta1 == oracle::betti1(oracle::flag_complex(gen_rgg(14, 0.45, 2, seed), cx.epsilon())));
    for (const ComplexTriangle& t : cx.triangles()) {
      CHECK_FALSE(ann.of({t.edges[0], t.edges[1], t.edges[2]}).any());
    }
    std::vector<BitVector> classes;
    for (const Cycle& c : horton_candidates(cx)) classes.push_back(ann.of(c.edges));
    CHECK(rank(classes) == ann.beta1);
  }
}

TEST_CASE("shortest path distances match Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FlagComplex2 cx = final_complex(gen_rgg(12, 0.5, 2, seed));
    const std::size_t n = cx.n_vertices();
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (const ComplexEdge& e : cx.edges()) d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.length);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (VertexId root = 0; root < n; ++root) {
      const ShortestPathTree tree = shortest_path_tree(cx, root);
      for (VertexId v = 0; v < n; ++v) {
        if (d[root][v] >= kInf) {
          CHECK_FALSE(tree.reached(v));
        } else {
          REQUIRE(tree.reached(v));
          CHECK(tree.dist[v] == d[root][v]);
        }
      }
    }
  }
}

TEST_CASE("Horton candidates are distinct cycles in canonical order") {
  const FlagComplex2 cx = final_complex(gen_rgg(12, 0.45, 2, 3));
  const auto candidates = horton_candidates(cx);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    CHECK(is_one_cycle(cx, candidates[i].edges));
    CHECK(make_cycle(cx, candidates[i].edges).length == candidates[i].length);
    CHECK(seen.insert(candidates[i].edges).second);
    if (i) CHECK_FALSE(canonical_less(candidates[i], candidates[i - 1]));
  }
}

TEST_CASE("single hole") {
  const MinimalBasisWithDraws b = min_basis_with_draws(final_complex(fixtures::cycle_graph(6)));
  CHECK(b.beta1 == 1);
  REQUIRE(b.variant_sets.size() == 1);
  CHECK(b.variant_sets[0].cycles.size() == 1);
  CHECK(b.total_length == 6);
  CHECK(min_basis_with_draws(final_complex(fixtures::complete_graph(5))).beta1 == 0);
}

TEST_CASE("diamond: two equal homologous cycles form one variant set") {
  const FlagComplex2 cx = final_complex(fixtures::half_weight_diamond());
  const MinimalBasisWithDraws b = min_basis_with_draws(cx);
  CHECK(b.beta1 == 1);
  REQUIRE(b.variant_sets.size() == 1);
  CHECK(b.variant_sets[0].cycles.size() == 2);
  CHECK(b.pathologies.empty());
  CHECK(cx.length_of_units(b.total_length) == 6);
}

TEST_CASE("theta: cross-class tie is one pathology event") {
  const FlagComplex2 cx = final_complex(fixtures::theta());
  const MinimalBasisWithDraws b = min_basis_with_draws(cx);
  CHECK(b.beta1 == 2);
  CHECK(b.pathologies.size() == 1);
  CHECK(b.pathologies[0].competing_classes == 2);
  CHECK(cx.length_of_units(b.pathologies[0].length) == 5);
  CHECK(cx.length_of_units(b.total_length) == 9);
}

TEST_CASE("variant sets are homologous, equal length and jointly independent") {
  const auto graphs = random_graphs::small_connected(40, 77, false);
  for (const WeightedGraph& g : graphs) {
    const FlagComplex2 cx = final_complex(g);
    const EdgeAnnotation ann = annotate_edges(cx);
    const MinimalBasisWithDraws b = min_basis_with_draws(cx);
    std::vector<BitVector> chosen;
    for (const VariantSet& v : b.variant_sets) {
      for (const Cycle& c : v.cycles) {
        CHECK(c.length == v.representative().length);
        CHECK(ann.of(c.edges) == v.annotation);
      }
      chosen.push_back(v.annotation);
    }
    CHECK(rank(chosen) == b.beta1);
  }
}

TEST_CASE("total length matches the brute-force optimum") {
  for (bool ties : {false, true}) {
    for (const WeightedGraph& g : random_graphs::small_connected(30, ties ? 11 : 12, ties)) {
      const Filtration f = build_filtration(g);
      for (std::size_t s = 0; s < f.size(); ++s) {
        const FlagComplex2 cx = flag_complex_at(f, s);
        const MinimalBasisWithDraws b = min_basis_with_draws(cx);
        const oracle::BasisOptimum opt = oracle::minimal_basis_length(oracle::flag_complex(g, f.threshold(s)));
        CHECK(b.beta1 == opt.beta1);
        CHECK(cx.length_of_units(b.total_length) == opt.total_length);
      }
    }
  }
}

}
