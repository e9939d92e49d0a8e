#include "doctest.h"
#include "fixtures.hpp"
#include "minscaffold/randnet.hpp"
#include "minscaffold/report.hpp"

using namespace minscaffold;

TEST_SUITE("report") {

TEST_CASE("scaffold csv round trip keeps exact weights") {
  Scaffold s;
  s.n_vertices = 6;
  s.provenance = Provenance::minimal_with_draws;
  s.pathology_events = 2;
  s.edge_weights[{0, 1}] = Rational(1, 3);
  s.edge_weights[{2, 5}] = Rational(7, 2);
  const std::string csv = scaffold_to_csv(s);
  CHECK(csv.find("0,1,0.333333333333,1,3\n") != std::string::npos);
  CHECK(parse_scaffold_csv(csv) == s);
}

TEST_CASE("scaffold csv errors") {
  CHECK_THROWS_AS(parse_scaffold_csv("u,v,weight_decimal,weight_num,weight_den\n1,0,1,1,1\n"), ParseError);
  CHECK_THROWS_AS(parse_scaffold_csv("0,1,1,1,0\n"), ParseError);
  CHECK_THROWS_AS(parse_scaffold_csv("0,1,1,1\n"), ParseError);
  CHECK_THROWS_AS(parse_scaffold_csv("0,1,1,1,1\n0,1,1,1,1\n"), ParseError);
}

TEST_CASE("barcode csv round trip") {
  const Barcode b = compute_persistence(build_filtration(gen_rgg(15, 0.4, 2, 1)));
  const Barcode back = parse_barcode_csv(barcode_to_csv(b));
  REQUIRE(back.pairs.size() == b.pairs.size());
  for (std::size_t i = 0; i < b.pairs.size(); ++i) {
    CHECK(back.pairs[i].dim == b.pairs[i].dim);
    CHECK(back.pairs[i].birth == b.pairs[i].birth);
    CHECK(back.pairs[i].death == b.pairs[i].death);
  }
  CHECK(barcode_to_csv(b).find(",inf\n") != std::string::npos);
  CHECK_THROWS_AS(parse_barcode_csv("dim,birth,death\n1,2,1\n"), ParseError);
}

TEST_CASE("ranking and timing round trips") {
  Scaffold s;
  s.n_vertices = 3;
  s.edge_weights[{0, 1}] = 2;
  s.edge_weights[{1, 2}] = 1;
  const auto ranking = rank_nodes(s);
  const auto back = parse_ranking_csv(ranking_to_csv(ranking, as_graph(s)));
  REQUIRE(back.size() == 3);
  CHECK(back[0].vertex == 1);
  CHECK(back[0].strength == 3);
  CHECK(back[0].relative_strength == doctest::Approx(1.5));

  const TimingRow row{"ws", 20, 10, 0.025, 7, 1.5, 12.25};
  const auto rows = parse_timing_csv(timing_header() + timing_row(row));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].k == 10);
  CHECK(rows[0].minimal_ms == 12.25);
}

TEST_CASE("debug dumps") {
  const Filtration f = build_filtration(fixtures::theta());
  const FlagComplex2 cx = flag_complex_at(f, f.size() - 1);
  const Json c = complex_to_json(cx);
  CHECK(c["edges"].size() == 7);
  CHECK(c["triangles"].empty());
  const Json m = minbasis_to_json(min_basis_with_draws(cx), cx);
  CHECK(m["beta1"] == 2);
  CHECK(m["pathology_events"].size() == 1);
  CHECK(m["total_length"] == "9");
}

}
