#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minscaffold/graph.hpp"
#include "minscaffold/persistence.hpp"
#include "minscaffold/report.hpp"
#include "minscaffold/scaffold.hpp"
#include "minscaffold/stats.hpp"

namespace minscaffold::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kParse = 4, kCompute = 5 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { edgelist, adjacency };
enum class MuWeights { filtration, original };
enum class ScaffoldKind { loose, minimal, draws, all };

struct InputSpec {
  std::filesystem::path path;
  Format format = Format::edgelist;
  Orientation orientation = Orientation::ascending;
  MuWeights mu_weights = MuWeights::filtration;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

WeightedGraph load_graph(const InputSpec& input);
/// Orients the graph and attaches cycle lengths (oriented or original weights).
Filtration make_filtration(const WeightedGraph& graph, const InputSpec& input);

struct ScaffoldConfig {
  InputSpec input;
  ScaffoldKind kind = ScaffoldKind::all;
  EssentialPolicy essential = EssentialPolicy::include;
  std::size_t workers = 1;
  std::filesystem::path out_dir = ".";
  bool debug = false;
};

struct ScaffoldOutputs {
  WeightedGraph graph;
  std::optional<Scaffold> loose;
  std::optional<MinimalScaffolds> minimal;
  Barcode barcode;
  std::vector<RankedNode> ranking;
  Json report;
  /// file name -> content, written together once everything is computed
  std::vector<std::pair<std::string, std::string>> files;
};

ScaffoldOutputs run_scaffold(const ScaffoldConfig& cfg);
void cmd_scaffold(const ScaffoldConfig& cfg);

struct PersistenceConfig {
  InputSpec input;
  std::filesystem::path out_dir = ".";
};

void cmd_persistence(const PersistenceConfig& cfg);

struct GenerateConfig {
  std::string model = "ws";  // ws, rgg, er, spectral
  std::size_t n = 20;
  std::size_t k = 4;
  double p = 0.1;
  double t = 0.3;
  std::size_t d = 2;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::filesystem::path input;  // correlation matrix for the spectral model
};

/// Fields of a JSON object override the defaults; unknown keys are an error.
GenerateConfig parse_generate_config(const std::string& json_text);
WeightedGraph generate_graph(const GenerateConfig& cfg);
/// Edge-list CSV, or a whitespace matrix for the spectral model.
std::string cmd_generate(const GenerateConfig& cfg);

/// Minimal vs loose scaffold of one graph against edge-count matched
/// Erdos-Renyi nulls drawn from `null_seed`.
ComparisonReport compare_minimal_loose(const WeightedGraph& g, std::uint64_t null_seed,
                                       PathLength lengths = PathLength::inverse_weight);

struct CompareConfig {
  std::filesystem::path a;  // scaffold CSVs; used when `model` is empty
  std::filesystem::path b;
  std::optional<GenerateConfig> model;
  std::size_t sample = 30;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  PathLength lengths = PathLength::inverse_weight;
  std::filesystem::path out_dir = ".";
};

struct CompareOutputs {
  std::vector<ComparisonReport> reports;
  std::vector<MetricAggregate> aggregate;
};

CompareOutputs run_compare(const CompareConfig& cfg);
void cmd_compare(const CompareConfig& cfg);

struct BenchConfig {
  std::vector<std::size_t> sizes{10, 20, 30, 40};
  std::optional<std::size_t> k;  // default n / 2
  double p = 0.025;
  std::size_t seeds = 5;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

std::vector<TimingRow> run_bench(const BenchConfig& cfg);
std::string cmd_bench(const BenchConfig& cfg);

/// Worker count: the SCAFFOLD_WORKERS environment variable wins over the
/// flag, which wins over 1.
std::size_t resolve_workers(std::optional<std::size_t> flag);

/// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minscaffold::cli
