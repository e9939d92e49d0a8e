#include "doctest.h"
#include "fixtures.hpp"
#include "minscaffold/complex.hpp"
#include "minscaffold/randnet.hpp"
#include "minscaffold/z2.hpp"

using namespace minscaffold;

TEST_SUITE("z2algebra") {

TEST_CASE("vector addition cancels") {
  Z2Vector a({1, 3, 5});
  a ^= Z2Vector({3, 4});
  CHECK(a == Z2Vector({1, 4, 5}));
  CHECK(Z2Vector({2, 2}).empty());
  CHECK(*Z2Vector({0, 7, 2}).low() == 7);
  CHECK_FALSE(Z2Vector().low().has_value());
}

TEST_CASE("boundary of a triangle") {
  const FlagComplex2 cx = flag_complex_at(fixtures::complete_graph(3), Rational(1));
  const Z2Matrix d1 = boundary_matrix(cx, 1), d2 = boundary_matrix(cx, 2);
  CHECK(d1.n_rows == 3);
  CHECK(d1.n_cols() == 3);
  CHECK(d2.n_cols() == 1);
  CHECK(d2.columns[0].size() == 3);
  CHECK(rank(d1) == 2);
  CHECK(rank(d2) == 1);
  CHECK_THROWS_AS(boundary_matrix(cx, 3), std::invalid_argument);
}

TEST_CASE("reduction is m times an upper unitriangular transform") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Filtration f = build_filtration(gen_rgg(14, 0.6, 2, seed));
    const FlagComplex2 cx = flag_complex_at(f, f.size() - 1);
    for (int k : {1, 2}) {
      const Z2Matrix m = boundary_matrix(cx, k);
      const ColumnReduction red = column_reduce(m);
      const Z2Matrix u = transform_from_ops(red.ops, m.n_cols());
      CHECK(m.multiply(u).columns == red.reduced.columns);
      for (std::uint32_t j = 0; j < u.n_cols(); ++j) CHECK(*u.columns[j].low() == j);
      std::vector<bool> used(m.n_rows, false);
      for (const Z2Vector& c : red.reduced.columns) {
        if (c.empty()) continue;
        CHECK_FALSE(used[*c.low()]);
        used[*c.low()] = true;
      }
      const TrackedReduction tracked = reduce_tracked(m, true);
      for (std::size_t j = 0; j < m.n_cols(); ++j) {
        CHECK(m.apply(tracked.transform[j]) == tracked.reduced[j]);
      }
    }
  }
}

TEST_CASE("rank is invariant under column permutation") {
  const Filtration f = build_filtration(gen_rgg(12, 0.6, 2, 4));
  const FlagComplex2 cx = flag_complex_at(f, f.size() - 1);
  Z2Matrix m = boundary_matrix(cx, 2);
  const std::size_t r = rank(m);
  CounterRng rng(1);
  rng.shuffle(m.columns);
  CHECK(rank(m) == r);
}

TEST_CASE("solving in the column span") {
  const Z2Matrix m{4, {Z2Vector({0, 1}), Z2Vector({1, 2}), Z2Vector({2, 3})}};
  const auto x = solve_in_span(m, Z2Vector({0, 3}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == Z2Vector({0, 3}));
  CHECK_FALSE(solve_in_span(m, Z2Vector({0})).has_value());
}

TEST_CASE("dense bit vectors") {
  BitVector a(130), b(130);
  a.set(0);
  a.set(129);
  b.set(129);
  CHECK(a.dot(b));
  b.set(0);
  CHECK_FALSE(a.dot(b));
  CHECK_FALSE((a ^ b).any());
  CHECK_THROWS(a ^= BitVector(3));
  std::vector<BitVector> vs{a, b, a ^ b};
  CHECK(rank(vs) == 1);
}

}
