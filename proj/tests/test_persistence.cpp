#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "minscaffold/complex.hpp"
#include "minscaffold/cycle.hpp"
#include "minscaffold/persistence.hpp"
#include "minscaffold/randnet.hpp"
#include "oracle.hpp"

using namespace minscaffold;

namespace {

std::vector<std::tuple<int, Rational, std::optional<Rational>>> bars(const Barcode& b) {
  std::vector<std::tuple<int, Rational, std::optional<Rational>>> out;
  for (const auto& p : b.pairs) out.emplace_back(p.dim, p.birth, p.death);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("persistence") {

TEST_CASE("unit square barcode") {
  const Barcode b = compute_persistence(build_filtration(fixtures::unit_square()));
  REQUIRE(b.count(1) == 1);
  const PersistencePair* loop = nullptr;
  for (const auto& p : b.pairs) {
    if (p.dim == 1) loop = &p;
  }
  CHECK(loop->birth == 1);
  REQUIRE(loop->death.has_value());
  CHECK(*loop->death == fixtures::sqrt2());
  CHECK(std::abs(to_double(*loop->death) - std::sqrt(2.0)) < 1e-9);
  CHECK(loop->generator->edges.size() == 4);

  std::size_t infinite0 = 0, finite0 = 0;
  for (const auto& p : b.pairs) {
    if (p.dim != 0) continue;
    if (p.essential()) ++infinite0;
    else {
      ++finite0;
      CHECK(*p.death == 1);
    }
  }
  CHECK(infinite0 == 1);
  CHECK(finite0 == 3);
}

TEST_CASE("open cycle is an essential class") {
  const Filtration f = build_filtration(fixtures::cycle_graph(5));
  const auto gens = ph1_generators(f);
  REQUIRE(gens.size() == 1);
  CHECK_FALSE(gens[0].death.has_value());
  CHECK(gens[0].cycle.edges.size() == 5);
}

TEST_CASE("zero-length bars are dropped") {
  // A triangle born all at once never shows a loop.
  const Barcode b = compute_persistence(build_filtration(fixtures::complete_graph(3)));
  CHECK(b.count(1) == 0);
}

TEST_CASE("bars alive at each step match beta_1 and the oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Filtration f = build_filtration(gen_rgg(12, 0.5, 2, seed));
    const Barcode b = compute_persistence(f);
    for (std::size_t s = 0; s < f.size(); ++s) {
      const FlagComplex2 cx = flag_complex_at(f, s);
      const std::size_t beta = betti1_at(cx);
      CHECK(b.alive_at(1, f.threshold(s)) == beta);
      CHECK(oracle::betti1(oracle::flag_complex(f.graph(), f.threshold(s))) == beta);
      CHECK(b.alive_at(0, f.threshold(s)) == cx.connected_components());
    }
  }
}

TEST_CASE("generators are cycles present at their birth") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Filtration f = build_filtration(gen_rgg(14, 0.45, 2, seed));
    const FlagComplex2 final_complex = flag_complex_at(f, f.size() - 1);
    for (const Ph1Generator& g : ph1_generators(f)) {
      CHECK(is_one_cycle(final_complex, g.cycle.edges));
      Rational latest = 0;
      for (std::uint32_t e : g.cycle.edges) {
        latest = std::max(latest, f.threshold(final_complex.edges()[e].step));
      }
      CHECK(latest == g.birth);
      if (g.death) CHECK(*g.death > g.birth);
    }
  }
}

TEST_CASE("barcode does not depend on vertex labels") {
  CounterRng rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = gen_rgg(15, 0.45, 2, seed);
    std::vector<VertexId> perm(g.n_vertices());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    rng.shuffle(perm);
    CHECK(bars(compute_persistence(build_filtration(g))) ==
          bars(compute_persistence(build_filtration(relabel_vertices(g, perm)))));
  }
}

}
