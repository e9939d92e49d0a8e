#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "minscaffold/randnet.hpp"
#include "minscaffold/report.hpp"

using namespace minscaffold;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("minscaffold_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "minscaffold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

fs::path write_graph(const fs::path& dir, const std::string& name, const WeightedGraph& g) {
  const fs::path p = dir / name;
  cli::write_file(p, serialize_edge_list(g));
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scaffold all on the unit square") {
  TempDir dir("square");
  const fs::path input = write_graph(dir.path, "square.csv", fixtures::unit_square());
  const fs::path out = dir.path / "out";
  REQUIRE(run({"scaffold", input.string(), "--scaffold", "all", "--out", out.string()}) == 0);
  const Scaffold loose = parse_scaffold_csv(cli::read_file(out / "scaffold_loose.csv"));
  const Scaffold minimal = parse_scaffold_csv(cli::read_file(out / "scaffold_minimal.csv"));
  const Scaffold draws = parse_scaffold_csv(cli::read_file(out / "scaffold_draws.csv"));
  CHECK(loose.edge_weights == minimal.edge_weights);
  CHECK(draws.edge_weights == minimal.edge_weights);
  CHECK(minimal.n_vertices == 4);
  CHECK(minimal.provenance == Provenance::minimal);
  const Barcode b = parse_barcode_csv(cli::read_file(out / "barcode.csv"));
  CHECK(b.count(1) == 1);
  CHECK(parse_ranking_csv(cli::read_file(out / "ranking.csv")).size() == 4);
  const Json report = Json::parse(cli::read_file(out / "report.json"));
  CHECK(report["pathology_events"] == 0);
  CHECK(report["beta1_profile"].size() == 2);
}

TEST_CASE("draws scaffold writes exact halves") {
  TempDir dir("diamond");
  const fs::path input = write_graph(dir.path, "diamond.csv", fixtures::half_weight_diamond());
  REQUIRE(run({"scaffold", input.string(), "--scaffold", "draws", "--out", dir.path.string()}) == 0);
  CHECK_FALSE(fs::exists(dir.path / "scaffold_minimal.csv"));
  const std::string csv = cli::read_file(dir.path / "scaffold_draws.csv");
  CHECK(csv.find("0,1,0.5,1,2\n") != std::string::npos);
  CHECK(csv.find("0,6,1,1,1\n") != std::string::npos);
  const Scaffold s = parse_scaffold_csv(csv);
  CHECK(s.edge_weights.at({0, 1}) == Rational(1, 2));
}

TEST_CASE("parallelism does not change scaffold files") {
  TempDir dir("parallel");
  const fs::path input = write_graph(dir.path, "g.csv", gen_rgg(18, 0.4, 2, 5));
  REQUIRE(run({"scaffold", input.string(), "--parallelism", "1", "--out", (dir.path / "a").string()}) == 0);
  REQUIRE(run({"scaffold", input.string(), "--parallelism", "8", "--out", (dir.path / "b").string()}) == 0);
  for (const char* name : {"scaffold_minimal.csv", "scaffold_draws.csv", "scaffold_loose.csv", "barcode.csv"}) {
    CHECK(cli::read_file(dir.path / "a" / name) == cli::read_file(dir.path / "b" / name));
  }
}

TEST_CASE("exit codes per error class") {
  TempDir dir("errors");
  CHECK(run({"scaffold", (dir.path / "missing.csv").string()}) == cli::kIo);
  cli::write_file(dir.path / "bad.csv", "0,1,1\n1,x,2\n");
  CHECK(run({"scaffold", (dir.path / "bad.csv").string(), "--out", dir.path.string()}) == cli::kParse);
  cli::write_file(dir.path / "loop.csv", "0,0,1\n");
  CHECK(run({"scaffold", (dir.path / "loop.csv").string(), "--out", dir.path.string()}) == cli::kParse);
  CHECK(run({"scaffold"}) == cli::kUsage);
  CHECK(run({"frobnicate"}) == cli::kUsage);
  CHECK(run({"scaffold", "x.csv", "--scaffold", "bogus"}) == cli::kUsage);
  CHECK(run({"generate", "--model", "ws", "--n", "10", "--k", "3"}) == cli::kUsage);
}

TEST_CASE("descending orientation and original lengths") {
  TempDir dir("orient");
  const fs::path input = write_graph(dir.path, "g.csv", gen_rgg(12, 0.5, 2, 2));
  CHECK(run({"scaffold", input.string(), "--orientation", "desc", "--mu-weights", "original", "--out",
             dir.path.string()}) == 0);
  const Json report = Json::parse(cli::read_file(dir.path / "report.json"));
  CHECK(report["orientation"] == "desc");
  CHECK(report["mu_weights"] == "original");
}

TEST_CASE("adjacency input") {
  TempDir dir("adjacency");
  cli::write_file(dir.path / "m.txt", "0 1 0 1\n1 0 1 0\n0 1 0 1\n1 0 1 0\n");
  REQUIRE(run({"scaffold", (dir.path / "m.txt").string(), "--format", "adjacency", "--out", dir.path.string()}) == 0);
  CHECK(parse_scaffold_csv(cli::read_file(dir.path / "scaffold_minimal.csv")).edge_weights.size() == 4);
}

TEST_CASE("persistence subcommand") {
  TempDir dir("persistence");
  const fs::path input = write_graph(dir.path, "sq.csv", fixtures::unit_square());
  REQUIRE(run({"persistence", input.string(), "--out", dir.path.string()}) == 0);
  const Barcode b = parse_barcode_csv(cli::read_file(dir.path / "barcode.csv"));
  CHECK(b.count(0) == 4);
  const Json j = Json::parse(cli::read_file(dir.path / "barcode.json"));
  CHECK(j["bars"].size() == 5);
}

TEST_CASE("generate is reproducible and re-parses") {
  std::string a, b;
  REQUIRE(run({"generate", "--model", "ws", "--n", "20", "--k", "10", "--p", "0.025", "--seed", "3"}, &a) == 0);
  REQUIRE(run({"generate", "--model", "ws", "--n", "20", "--k", "10", "--p", "0.025", "--seed", "3"}, &b) == 0);
  CHECK(a == b);
  CHECK(parse_edge_list(a) == gen_ws_weighted(20, 10, 0.025, 3));

  TempDir dir("generate");
  cli::write_file(dir.path / "cfg.json", R"({"model": "rgg", "n": 25, "t": 0.3, "seed": 4})");
  REQUIRE(run({"generate", "--config", (dir.path / "cfg.json").string(), "--out", (dir.path / "g.csv").string()}) == 0);
  CHECK(parse_edge_list(cli::read_file(dir.path / "g.csv")) == gen_rgg(25, 0.3, 2, 4));
  cli::write_file(dir.path / "bad.json", R"({"model": "rgg", "radius": 2})");
  CHECK(run({"generate", "--config", (dir.path / "bad.json").string()}) == cli::kParse);

  cli::write_file(dir.path / "corr.txt", "1 0.5\n0.5 1\n");
  std::string rotated;
  REQUIRE(run({"generate", "--model", "spectral", "--input", (dir.path / "corr.txt").string()}, &rotated) == 0);
  CHECK_FALSE(rotated.empty());
}

TEST_CASE("compare the same scaffold twice") {
  TempDir dir("compare");
  const fs::path input = write_graph(dir.path, "g.csv", gen_ws_weighted(20, 10, 0.025, 1));
  REQUIRE(run({"scaffold", input.string(), "--out", dir.path.string()}) == 0);
  const std::string s = (dir.path / "scaffold_minimal.csv").string();
  REQUIRE(run({"compare", "--a", s, "--b", s, "--out", dir.path.string()}) == 0);
  const Json j = Json::parse(cli::read_file(dir.path / "comparison.json"));
  for (const auto& [metric, entry] : j["aggregate"].items()) {
    if (!entry["pearson"].is_null()) CHECK(entry["pearson"].get<double>() == doctest::Approx(1.0));
    if (!entry["spearman"].is_null()) CHECK(entry["spearman"].get<double>() == doctest::Approx(1.0));
  }
}

TEST_CASE("compare a generated sample") {
  TempDir dir("sample");
  REQUIRE(run({"compare", "--model", "rgg", "--n", "15", "--t", "0.4", "--sample", "3", "--out",
               dir.path.string()}) == 0);
  const std::string csv = cli::read_file(dir.path / "boxplot.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 7);
}

TEST_CASE("bench writes a timing table") {
  std::string csv;
  REQUIRE(run({"bench", "--sizes", "8,10", "--seeds", "2"}, &csv) == 0);
  const auto rows = parse_timing_csv(csv);
  REQUIRE(rows.size() == 4);
  for (const TimingRow& r : rows) {
    CHECK(r.model == "ws");
    CHECK(r.k == r.n / 2 - (r.n / 2) % 2);
    CHECK(r.loose_ms > 0.0);
    CHECK(r.minimal_ms > 0.0);
  }
  CHECK(run({"bench", "--sizes", "8,x"}) == cli::kUsage);
}

TEST_CASE("worker count resolution") {
  CHECK(cli::resolve_workers(std::nullopt) == 1);
  CHECK(cli::resolve_workers(6) == 6);
  ::setenv("SCAFFOLD_WORKERS", "3", 1);
  CHECK(cli::resolve_workers(6) == 3);
  ::setenv("SCAFFOLD_WORKERS", "zero", 1);
  CHECK_THROWS_AS(cli::resolve_workers(6), cli::UsageError);
  ::unsetenv("SCAFFOLD_WORKERS");
  CHECK_THROWS_AS(cli::resolve_workers(0), cli::UsageError);
}

}
