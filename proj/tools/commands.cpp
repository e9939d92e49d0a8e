#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "minscaffold/complex.hpp"
#include "minscaffold/minbasis.hpp"
#include "minscaffold/parallel.hpp"
#include "minscaffold/randnet.hpp"

namespace minscaffold::cli {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw IoError("error while writing " + path.string());
}

WeightedGraph load_graph(const InputSpec& input) {
  const std::string text = read_file(input.path);
  return input.format == Format::edgelist ? parse_edge_list(text) : parse_adjacency(text);
}

Filtration make_filtration(const WeightedGraph& graph, const InputSpec& input) {
  WeightedGraph oriented = orient_filtration(graph, input.orientation);
  if (input.mu_weights == MuWeights::filtration) return build_filtration(oriented);
  std::vector<Rational> lengths;
  lengths.reserve(graph.n_edges());
  for (const Edge& e : graph.edges()) lengths.push_back(e.w);
  return build_filtration(oriented, std::move(lengths));
}

namespace {

const char* kind_name(ScaffoldKind k) {
  switch (k) {
    case ScaffoldKind::loose: return "loose";
    case ScaffoldKind::minimal: return "minimal";
    case ScaffoldKind::draws: return "draws";
    case ScaffoldKind::all: return "all";
  }
  return "all";
}

Json scaffold_summary(const Scaffold& s) {
  return Json{{"provenance", to_string(s.provenance)},
              {"edges", s.edge_weights.size()},
              {"total_weight", to_fraction_string(s.total_weight())},
              {"pathology_events", s.pathology_events}};
}

void write_all(const std::filesystem::path& dir,
               const std::vector<std::pair<std::string, std::string>>& files) {
  for (const auto& [name, content] : files) write_file(dir / name, content);
}

}  // namespace

ScaffoldOutputs run_scaffold(const ScaffoldConfig& cfg) {
  ScaffoldOutputs out;
  out.graph = load_graph(cfg.input);
  const Filtration f = make_filtration(out.graph, cfg.input);

  const bool want_loose = cfg.kind == ScaffoldKind::loose || cfg.kind == ScaffoldKind::all;
  const bool want_minimal = cfg.kind != ScaffoldKind::loose;
  if (want_loose) out.loose = loose_scaffold(f, cfg.essential);
  if (want_minimal) out.minimal = minimal_scaffolds(f, cfg.workers);
  out.barcode = compute_persistence(f);

  const Scaffold& ranked = out.minimal ? out.minimal->minimal : *out.loose;
  if (!ranked.empty()) out.ranking = rank_nodes(ranked);

  Json report{{"input", cfg.input.path.string()},
              {"orientation", cfg.input.orientation == Orientation::ascending ? "asc" : "desc"},
              {"mu_weights", cfg.input.mu_weights == MuWeights::filtration ? "filtration" : "original"},
              {"essential", cfg.essential == EssentialPolicy::include ? "include" : "exclude"},
              {"scaffold", kind_name(cfg.kind)},
              {"barcode", {{"dim0", out.barcode.count(0)}, {"dim1", out.barcode.count(1)}}}};
  Json scaffolds = Json::object();
  if (out.loose) scaffolds["loose"] = scaffold_summary(*out.loose);
  if (out.minimal) {
    if (cfg.kind != ScaffoldKind::draws) scaffolds["minimal"] = scaffold_summary(out.minimal->minimal);
    if (cfg.kind != ScaffoldKind::minimal) scaffolds["draws"] = scaffold_summary(out.minimal->with_draws);
    const Json details = scaffold_report_json(f, *out.minimal);
    for (const auto& [key, value] : details.items()) report[key] = value;
  }
  report["scaffolds"] = std::move(scaffolds);
  Json top = Json::array();
  for (std::size_t i = 0; i < out.ranking.size() && i < 10; ++i) {
    const RankedNode& r = out.ranking[i];
    top.push_back({{"vertex", r.vertex},
                   {"label", out.graph.label(r.vertex)},
                   {"strength", to_decimal_string(r.strength)},
                   {"relative_strength", r.relative_strength}});
  }
  report["ranking_top"] = std::move(top);
  out.report = report;

  if (out.loose) out.files.emplace_back("scaffold_loose.csv", scaffold_to_csv(*out.loose));
  if (out.minimal && cfg.kind != ScaffoldKind::draws) {
    out.files.emplace_back("scaffold_minimal.csv", scaffold_to_csv(out.minimal->minimal));
  }
  if (out.minimal && cfg.kind != ScaffoldKind::minimal) {
    out.files.emplace_back("scaffold_draws.csv", scaffold_to_csv(out.minimal->with_draws));
  }
  out.files.emplace_back("barcode.csv", barcode_to_csv(out.barcode));
  out.files.emplace_back("ranking.csv", ranking_to_csv(out.ranking, out.graph));
  out.files.emplace_back("report.json", out.report.dump(2) + "\n");
  if (cfg.debug) {
    const FlagComplex2 final_complex = flag_complex_at(f, f.size() - 1);
    out.files.emplace_back("complex_final.json", complex_to_json(final_complex).dump(2) + "\n");
    out.files.emplace_back("minbasis_final.json",
                           minbasis_to_json(min_basis_with_draws(final_complex), final_complex).dump(2) + "\n");
  }
  return out;
}

void cmd_scaffold(const ScaffoldConfig& cfg) { write_all(cfg.out_dir, run_scaffold(cfg).files); }

void cmd_persistence(const PersistenceConfig& cfg) {
  const Filtration f = make_filtration(load_graph(cfg.input), cfg.input);
  const Barcode barcode = compute_persistence(f);
  const FlagComplex2 final_complex = flag_complex_at(f, f.size() - 1);
  write_all(cfg.out_dir, {{"barcode.csv", barcode_to_csv(barcode)},
                          {"barcode.json", barcode_to_json(barcode, final_complex).dump(2) + "\n"}});
}

GenerateConfig parse_generate_config(const std::string& json_text) {
  GenerateConfig cfg;
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("generator config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "generator config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "model") cfg.model = value.get<std::string>();
      else if (key == "n") cfg.n = value.get<std::size_t>();
      else if (key == "k") cfg.k = value.get<std::size_t>();
      else if (key == "p") cfg.p = value.get<double>();
      else if (key == "t") cfg.t = value.get<double>();
      else if (key == "d") cfg.d = value.get<std::size_t>();
      else if (key == "m") cfg.m = value.get<std::size_t>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "input") cfg.input = value.get<std::string>();
      else throw ParseError(0, "generator config: unknown key '" + key + "'");
    }
  } catch (const Json::type_error& e) {
    throw ParseError(0, std::string("generator config: ") + e.what());
  }
  return cfg;
}

WeightedGraph generate_graph(const GenerateConfig& cfg) {
  if (cfg.model == "ws") return gen_ws_weighted(cfg.n, cfg.k, cfg.p, cfg.seed);
  if (cfg.model == "rgg") return gen_rgg(cfg.n, cfg.t, cfg.d, cfg.seed);
  if (cfg.model == "er") return gen_er_null(cfg.n, cfg.m, cfg.seed);
  throw UsageError("unknown graph model '" + cfg.model + "' (expected ws, rgg or er)");
}

namespace {

Eigen::MatrixXd parse_matrix(const std::string& text) {
  const WeightedGraph unused = parse_adjacency(text);  // validates shape and symmetry
  const std::size_t n = unused.n_vertices();
  std::vector<double> values;
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  double x;
  while (in >> x) values.push_back(x);
  if (values.size() != n * n) throw ParseError(0, "matrix is not square");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[i * n + j];
  }
  return m;
}

std::string format_matrix(const Eigen::MatrixXd& m) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string cmd_generate(const GenerateConfig& cfg) {
  if (cfg.model == "spectral") {
    if (cfg.input.empty()) throw UsageError("spectral model needs --input with a correlation matrix");
    const Eigen::MatrixXd corr = parse_matrix(read_file(cfg.input));
    return format_matrix(spectral_rotation_null(corr, cfg.seed));
  }
  return serialize_edge_list(generate_graph(cfg));
}

ComparisonReport compare_minimal_loose(const WeightedGraph& g, std::uint64_t null_seed,
                                       PathLength lengths) {
  const Filtration f = build_filtration(g);
  const WeightedGraph minimal = as_graph(minimal_scaffold(f));
  const WeightedGraph loose = as_graph(loose_scaffold(f));
  const std::size_t n = g.n_vertices();
  CounterRng rng(null_seed);
  const WeightedGraph null_minimal = gen_er_null(n, minimal.n_edges(), rng.next());
  const WeightedGraph null_loose = gen_er_null(n, loose.n_edges(), rng.next());
  return compare_scaffolds(minimal, loose, null_minimal, null_loose, lengths);
}

CompareOutputs run_compare(const CompareConfig& cfg) {
  CompareOutputs out;
  if (cfg.model) {
    if (cfg.sample == 0) throw UsageError("--sample must be positive");
    out.reports.resize(cfg.sample);
    parallel_for(cfg.sample, cfg.workers, [&](std::size_t i) {
      GenerateConfig instance = *cfg.model;
      instance.seed = cfg.seed + i;
      out.reports[i] = compare_minimal_loose(generate_graph(instance), CounterRng(cfg.seed, i + 1).next(),
                                             cfg.lengths);
    });
  } else {
    if (cfg.a.empty() || cfg.b.empty()) throw UsageError("compare needs --a and --b, or --model");
    const Scaffold a = parse_scaffold_csv(read_file(cfg.a));
    const Scaffold b = parse_scaffold_csv(read_file(cfg.b));
    if (a.n_vertices != b.n_vertices) throw GraphError("scaffolds have different vertex counts");
    CounterRng rng(cfg.seed);
    const WeightedGraph null_a = gen_er_null(a.n_vertices, a.edge_weights.size(), rng.next());
    const WeightedGraph null_b = gen_er_null(b.n_vertices, b.edge_weights.size(), rng.next());
    out.reports.push_back(compare_scaffolds(as_graph(a), as_graph(b), null_a, null_b, cfg.lengths));
  }
  out.aggregate = aggregate_comparisons(out.reports);
  return out;
}

void cmd_compare(const CompareConfig& cfg) {
  const CompareOutputs result = run_compare(cfg);
  auto value = [](const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); };
  Json aggregate = Json::object();
  for (const MetricAggregate& m : result.aggregate) {
    aggregate[std::string(to_string(m.metric))] = {
        {"instances", m.instances},
        {"pearson", value(m.pearson)},
        {"spearman", value(m.spearman)},
        {"null_pearson", value(m.null_pearson)},
        {"null_spearman", value(m.null_spearman)},
        {"ks_inconclusive_fraction", m.ks_inconclusive_fraction},
        {"null_ks_inconclusive_fraction", m.null_ks_inconclusive_fraction}};
  }
  Json instances = Json::array();
  std::string boxplot = boxplot_header();
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    instances.push_back(comparison_to_json(result.reports[i]));
    boxplot += boxplot_rows(i, result.reports[i]);
  }
  const Json report{{"aggregate", std::move(aggregate)}, {"instances", std::move(instances)}};
  write_all(cfg.out_dir, {{"comparison.json", report.dump(2) + "\n"}, {"boxplot.csv", boxplot}});
}

std::vector<TimingRow> run_bench(const BenchConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  auto elapsed_ms = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };
  std::vector<TimingRow> rows;
  for (std::size_t n : cfg.sizes) {
    const std::size_t k = cfg.k.value_or(n / 2 - (n / 2) % 2);
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      TimingRow row{"ws", n, k, cfg.p, cfg.seed + s, 0.0, 0.0};
      const WeightedGraph g = gen_ws_weighted(n, k, cfg.p, row.seed);

      auto start = Clock::now();
      const Scaffold loose = loose_scaffold(build_filtration(g));
      row.loose_ms = elapsed_ms(start);

      start = Clock::now();
      const Scaffold minimal = minimal_scaffold(build_filtration(g), cfg.workers);
      row.minimal_ms = elapsed_ms(start);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string cmd_bench(const BenchConfig& cfg) {
  std::string csv = timing_header();
  for (const TimingRow& row : run_bench(cfg)) csv += timing_row(row);
  return csv;
}

std::size_t resolve_workers(std::optional<std::size_t> flag) {
  if (const char* env = std::getenv("SCAFFOLD_WORKERS"); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw UsageError("SCAFFOLD_WORKERS must be a positive integer");
    return static_cast<std::size_t>(value);
  }
  if (flag && *flag == 0) throw UsageError("--parallelism must be at least 1");
  return flag.value_or(1);
}

namespace {

void add_input_options(CLI::App& cmd, InputSpec& input, std::string& format, std::string& orientation,
                       std::string& mu) {
  cmd.add_option("input", input.path, "Graph file")->required();
  cmd.add_option("--format", format, "edgelist or adjacency")
      ->check(CLI::IsMember({"edgelist", "adjacency"}));
  cmd.add_option("--orientation", orientation, "asc: light edges first; desc: heavy edges first")
      ->check(CLI::IsMember({"asc", "desc"}));
  cmd.add_option("--mu-weights", mu, "cycle lengths from filtration or original weights")
      ->check(CLI::IsMember({"filtration", "original"}));
}

void finish_input(InputSpec& input, const std::string& format, const std::string& orientation,
                  const std::string& mu) {
  input.format = format == "adjacency" ? Format::adjacency : Format::edgelist;
  input.orientation = orientation == "desc" ? Orientation::descending : Orientation::ascending;
  input.mu_weights = mu == "original" ? MuWeights::original : MuWeights::filtration;
}

void add_model_options(CLI::App& cmd, GenerateConfig& g) {
  cmd.add_option("--n", g.n, "Number of vertices");
  cmd.add_option("--k", g.k, "Ring neighbours (ws)");
  cmd.add_option("--p", g.p, "Rewiring probability (ws)");
  cmd.add_option("--t", g.t, "Distance threshold (rgg)");
  cmd.add_option("--d", g.d, "Dimension (rgg)");
  cmd.add_option("--m", g.m, "Edge count (er)");
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad size list '" + list + "'");
    }
  }
  return sizes;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal and loose homological scaffolds of weighted graphs", "minscaffold"};
  app.require_subcommand(1);

  std::optional<std::size_t> parallelism;
  std::uint64_t seed = 0;
  std::string out_dir = ".";

  // scaffold
  ScaffoldConfig scaffold_cfg;
  std::string s_format = "edgelist", s_orientation = "asc", s_mu = "filtration";
  std::string s_kind = "all", s_essential = "include";
  auto* scaffold = app.add_subcommand("scaffold", "Compute scaffolds, barcode, report and node ranking");
  add_input_options(*scaffold, scaffold_cfg.input, s_format, s_orientation, s_mu);
  scaffold->add_option("--scaffold", s_kind, "loose, minimal, draws or all")
      ->check(CLI::IsMember({"loose", "minimal", "draws", "all"}));
  scaffold->add_option("--essential", s_essential, "include or exclude essential classes (loose)")
      ->check(CLI::IsMember({"include", "exclude"}));
  scaffold->add_option("--parallelism", parallelism, "Worker threads");
  scaffold->add_option("--out", out_dir, "Output directory");
  scaffold->add_flag("--debug", scaffold_cfg.debug, "Also dump the final complex and minimal basis");

  // persistence
  PersistenceConfig persistence_cfg;
  std::string p_format = "edgelist", p_orientation = "asc", p_mu = "filtration";
  auto* persistence = app.add_subcommand("persistence", "Barcode of the flag filtration");
  add_input_options(*persistence, persistence_cfg.input, p_format, p_orientation, p_mu);
  persistence->add_option("--out", out_dir, "Output directory");

  // generate
  GenerateConfig generate_cfg;
  std::string g_config, g_out, g_input;
  auto* generate = app.add_subcommand("generate", "Random graph or spectral null matrix");
  generate->add_option("--model", generate_cfg.model, "ws, rgg, er or spectral")
      ->check(CLI::IsMember({"ws", "rgg", "er", "spectral"}));
  add_model_options(*generate, generate_cfg);
  generate->add_option("--input", g_input, "Correlation matrix (spectral)");
  generate->add_option("--config", g_config, "JSON file with generator parameters");
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--out", g_out, "Output file (default stdout)");

  // compare
  CompareConfig compare_cfg;
  GenerateConfig compare_model;
  std::string c_model, c_lengths = "inverse";
  auto* compare = app.add_subcommand("compare", "Compare minimal and loose scaffolds");
  compare->add_option("--a", compare_cfg.a, "First scaffold CSV");
  compare->add_option("--b", compare_cfg.b, "Second scaffold CSV");
  compare->add_option("--model", c_model, "Generate a sample: ws or rgg")->check(CLI::IsMember({"ws", "rgg"}));
  add_model_options(*compare, compare_model);
  compare->add_option("--sample", compare_cfg.sample, "Number of generated instances");
  compare->add_option("--lengths", c_lengths, "Path lengths: inverse (1/w) or weight")
      ->check(CLI::IsMember({"inverse", "weight"}));
  compare->add_option("--seed", seed, "Random seed");
  compare->add_option("--parallelism", parallelism, "Worker threads");
  compare->add_option("--out", out_dir, "Output directory");

  // bench
  BenchConfig bench_cfg;
  std::string b_sizes = "10,20,30,40", b_out;
  std::optional<std::size_t> b_k;
  auto* bench = app.add_subcommand("bench", "Time loose and minimal scaffolds on weighted WS graphs");
  bench->add_option("--sizes", b_sizes, "Comma separated vertex counts");
  bench->add_option("--k", b_k, "Ring neighbours (default n/2)");
  bench->add_option("--p", bench_cfg.p, "Rewiring probability");
  bench->add_option("--seeds", bench_cfg.seeds, "Instances per size");
  bench->add_option("--seed", seed, "First seed");
  bench->add_option("--parallelism", parallelism, "Worker threads for the minimal scaffold");
  bench->add_option("--out", b_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*scaffold) {
      finish_input(scaffold_cfg.input, s_format, s_orientation, s_mu);
      scaffold_cfg.kind = s_kind == "loose"     ? ScaffoldKind::loose
                          : s_kind == "minimal" ? ScaffoldKind::minimal
                          : s_kind == "draws"   ? ScaffoldKind::draws
                                                : ScaffoldKind::all;
      scaffold_cfg.essential = s_essential == "exclude" ? EssentialPolicy::exclude : EssentialPolicy::include;
      scaffold_cfg.workers = resolve_workers(parallelism);
      scaffold_cfg.out_dir = out_dir;
      cmd_scaffold(scaffold_cfg);
    } else if (*persistence) {
      finish_input(persistence_cfg.input, p_format, p_orientation, p_mu);
      persistence_cfg.out_dir = out_dir;
      cmd_persistence(persistence_cfg);
    } else if (*generate) {
      GenerateConfig cfg = generate_cfg;
      if (!g_config.empty()) cfg = parse_generate_config(read_file(g_config));
      if (generate->count("--seed")) cfg.seed = seed;
      if (!g_input.empty()) cfg.input = g_input;
      const std::string text = cmd_generate(cfg);
      if (g_out.empty()) out << text;
      else write_file(g_out, text);
    } else if (*compare) {
      if (!c_model.empty()) {
        compare_model.model = c_model;
        compare_cfg.model = compare_model;
      }
      compare_cfg.seed = seed;
      compare_cfg.lengths = c_lengths == "weight" ? PathLength::weight : PathLength::inverse_weight;
      compare_cfg.workers = resolve_workers(parallelism);
      compare_cfg.out_dir = out_dir;
      cmd_compare(compare_cfg);
    } else if (*bench) {
      bench_cfg.sizes = parse_sizes(b_sizes);
      bench_cfg.k = b_k;
      bench_cfg.seed = seed;
      bench_cfg.workers = resolve_workers(parallelism);
      const std::string csv = cmd_bench(bench_cfg);
      if (b_out.empty()) out << csv;
      else write_file(b_out, csv);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << '\n';
    return kCompute;
  }
  return kOk;
}

}  // namespace minscaffold::cli
