#include "minscaffold/report.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "minscaffold/text.hpp"

namespace minscaffold {

namespace {

using text::split_fields;
using text::split_lines;
using text::trim;

template <typename T>
T parse_number(std::string_view s, std::size_t line) {
  s = trim(s);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "bad number '" + std::string(s) + "'");
  }
  return value;
}

double parse_real(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  return parse_number<double>(s, line);
}

Rational parse_exact(std::string_view s, std::size_t line) {
  try {
    return parse_decimal(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_real(*x) : "nan";
}

/// Data lines with their 1-based numbers; blank lines and `#` lines are skipped,
/// as is a first data line equal to `header`.
std::vector<std::pair<std::size_t, std::string_view>> data_lines(std::string_view text,
                                                                 std::string_view header) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  bool first = true;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (first) {
      first = false;
      if (line == header) continue;
    }
    out.emplace_back(i + 1, line);
  }
  return out;
}

std::vector<std::string_view> expect_fields(std::string_view line, std::size_t n, std::size_t number) {
  auto fields = split_fields(line);
  if (fields.size() != n) {
    throw ParseError(number, "expected " + std::to_string(n) + " fields, got " +
                                 std::to_string(fields.size()));
  }
  return fields;
}

Json edge_pairs(const Cycle& c, const FlagComplex2& cx) {
  Json edges = Json::array();
  for (std::uint32_t e : c.edges) edges.push_back({cx.edges()[e].u, cx.edges()[e].v});
  return edges;
}

constexpr std::string_view kScaffoldHeader = "u,v,weight_decimal,weight_num,weight_den";
constexpr std::string_view kBarcodeHeader = "dim,birth,death";
constexpr std::string_view kRankingHeader = "rank,vertex,label,strength,relative_strength";
constexpr std::string_view kTimingHeader = "model,n,k,p,seed,loose_ms,minimal_ms";

}  // namespace

std::string scaffold_to_csv(const Scaffold& s) {
  std::ostringstream out;
  out << "# provenance=" << to_string(s.provenance) << " n_vertices=" << s.n_vertices
      << " pathology_events=" << s.pathology_events << '\n';
  out << kScaffoldHeader << '\n';
  for (const auto& [edge, w] : s.edge_weights) {
    out << edge.first << ',' << edge.second << ',' << to_decimal_string(w) << ','
        << numerator(w) << ',' << denominator(w) << '\n';
  }
  return out.str();
}

Scaffold parse_scaffold_csv(std::string_view text) {
  Scaffold s;
  bool have_meta = false;
  const auto lines = split_lines(text);
  if (!lines.empty() && trim(lines[0]).starts_with('#')) {
    std::istringstream meta{std::string(trim(lines[0]).substr(1))};
    std::string token;
    while (meta >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
      if (key == "provenance") {
        if (value == "loose") s.provenance = Provenance::loose;
        else if (value == "minimal") s.provenance = Provenance::minimal;
        else if (value == "minimal_with_draws") s.provenance = Provenance::minimal_with_draws;
        else throw ParseError(1, "unknown provenance '" + value + "'");
      } else if (key == "n_vertices") {
        s.n_vertices = parse_number<std::size_t>(value, 1);
        have_meta = true;
      } else if (key == "pathology_events") {
        s.pathology_events = parse_number<std::size_t>(value, 1);
      }
    }
  }
  for (const auto& [number, line] : data_lines(text, kScaffoldHeader)) {
    const auto f = expect_fields(line, 5, number);
    const auto u = parse_number<VertexId>(f[0], number);
    const auto v = parse_number<VertexId>(f[1], number);
    if (u >= v) throw ParseError(number, "edge must satisfy u < v");
    BigInt num, den;
    try {
      num = BigInt(std::string(f[3]));
      den = BigInt(std::string(f[4]));
    } catch (const std::exception&) {
      throw ParseError(number, "bad fraction");
    }
    if (den <= 0) throw ParseError(number, "denominator must be positive");
    const Rational w(num, den);
    if (w <= 0) throw ParseError(number, "scaffold weights must be positive");
    if (!s.edge_weights.emplace(std::pair{u, v}, w).second) throw ParseError(number, "duplicate edge");
    if (!have_meta) s.n_vertices = std::max<std::size_t>(s.n_vertices, v + 1);
  }
  return s;
}

std::string barcode_to_csv(const Barcode& b) {
  std::ostringstream out;
  out << kBarcodeHeader << '\n';
  for (const PersistencePair& p : b.pairs) {
    out << p.dim << ',' << to_decimal_string(p.birth, 40) << ','
        << (p.death ? to_decimal_string(*p.death, 40) : std::string("inf")) << '\n';
  }
  return out.str();
}

Barcode parse_barcode_csv(std::string_view text) {
  Barcode b;
  for (const auto& [number, line] : data_lines(text, kBarcodeHeader)) {
    const auto f = expect_fields(line, 3, number);
    PersistencePair p;
    p.dim = parse_number<int>(f[0], number);
    if (p.dim < 0) throw ParseError(number, "negative dimension");
    p.birth = parse_exact(f[1], number);
    if (f[2] != "inf") {
      p.death = parse_exact(f[2], number);
      if (*p.death < p.birth) throw ParseError(number, "death before birth");
    }
    b.pairs.push_back(std::move(p));
  }
  return b;
}

Json barcode_to_json(const Barcode& b, const FlagComplex2& final_complex) {
  Json bars = Json::array();
  for (const PersistencePair& p : b.pairs) {
    Json bar{{"dim", p.dim},
             {"birth", to_decimal_string(p.birth, 40)},
             {"death", p.death ? Json(to_decimal_string(*p.death, 40)) : Json(nullptr)}};
    if (p.generator) bar["generator"] = edge_pairs(*p.generator, final_complex);
    bars.push_back(std::move(bar));
  }
  return Json{{"bars", std::move(bars)}};
}

std::string ranking_to_csv(const std::vector<RankedNode>& ranking, const WeightedGraph& g) {
  std::ostringstream out;
  out << kRankingHeader << '\n';
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const RankedNode& r = ranking[i];
    std::string label = g.label(r.vertex);
    for (char& c : label) {
      if (c == ',') c = ';';
    }
    out << i + 1 << ',' << r.vertex << ',' << label << ',' << to_decimal_string(r.strength) << ','
        << format_real(r.relative_strength) << '\n';
  }
  return out.str();
}

std::vector<RankedNode> parse_ranking_csv(std::string_view text) {
  std::vector<RankedNode> ranking;
  for (const auto& [number, line] : data_lines(text, kRankingHeader)) {
    const auto f = expect_fields(line, 5, number);
    RankedNode r;
    r.vertex = parse_number<VertexId>(f[1], number);
    r.strength = parse_exact(f[3], number);
    r.relative_strength = parse_real(f[4], number);
    ranking.push_back(std::move(r));
  }
  return ranking;
}

Json complex_to_json(const FlagComplex2& cx) {
  Json edges = Json::array(), triangles = Json::array();
  for (const ComplexEdge& e : cx.edges()) {
    edges.push_back({{"vertices", {e.u, e.v}}, {"step", e.step}});
  }
  for (const ComplexTriangle& t : cx.triangles()) {
    triangles.push_back({{"vertices", {t.a, t.b, t.c}}, {"step", t.step}});
  }
  return Json{{"epsilon", to_decimal_string(cx.epsilon(), 40)},
              {"n_vertices", cx.n_vertices()},
              {"edges", std::move(edges)},
              {"triangles", std::move(triangles)}};
}

Json minbasis_to_json(const MinimalBasisWithDraws& basis, const FlagComplex2& cx) {
  Json rounds = Json::array();
  for (std::size_t i = 0; i < basis.variant_sets.size(); ++i) {
    const VariantSet& v = basis.variant_sets[i];
    Json cycles = Json::array();
    for (const Cycle& c : v.cycles) cycles.push_back(edge_pairs(c, cx));
    rounds.push_back({{"round", i},
                      {"length", to_decimal_string(cx.length_of_units(v.representative().length), 40)},
                      {"variant_set_size", v.cycles.size()},
                      {"cycles", std::move(cycles)}});
  }
  Json events = Json::array();
  for (const PathologyEvent& e : basis.pathologies) {
    events.push_back({{"round", e.round},
                      {"length", to_decimal_string(cx.length_of_units(e.length), 40)},
                      {"competing_classes", e.competing_classes}});
  }
  return Json{{"beta1", basis.beta1},
              {"total_length", to_decimal_string(cx.length_of_units(basis.total_length), 40)},
              {"rounds", std::move(rounds)},
              {"pathology_events", std::move(events)}};
}

Json scaffold_report_json(const Filtration& f, const MinimalScaffolds& minimal) {
  Json profile = Json::array();
  std::map<std::size_t, std::size_t> histogram;
  for (const StepSummary& s : minimal.steps) {
    profile.push_back({{"step", s.step},
                       {"threshold", to_decimal_string(f.threshold(s.step), 40)},
                       {"beta1", s.beta1},
                       {"total_length", to_decimal_string(s.total_length, 40)},
                       {"pathology_events", s.pathology_events}});
    for (std::size_t size : s.variant_sizes) ++histogram[size];
  }
  Json hist = Json::object();
  for (const auto& [size, count] : histogram) hist[std::to_string(size)] = count;
  return Json{{"n_vertices", f.graph().n_vertices()},
              {"n_edges", f.graph().n_edges()},
              {"n_steps", f.size()},
              {"beta1_profile", std::move(profile)},
              {"variant_set_sizes", std::move(hist)},
              {"pathology_events", minimal.minimal.pathology_events}};
}

Json comparison_to_json(const ComparisonReport& r) {
  auto corr = [](const Correlations& c) {
    auto value = [](const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); };
    return Json{{"pearson", value(c.pearson)}, {"spearman", value(c.spearman)}};
  };
  Json metrics = Json::object();
  for (const MetricComparison& m : r.metrics) {
    Json entry{{"direct", corr(m.direct)},
               {"a_vs_null_b", corr(m.a_vs_null_b)},
               {"b_vs_null_a", corr(m.b_vs_null_a)},
               {"ks_statistic", m.ks.statistic},
               {"ks_p_value", m.ks.p_value},
               {"ks_inconclusive", m.ks.inconclusive()},
               {"null_ks_statistic", m.ks_null.statistic},
               {"null_ks_p_value", m.ks_null.p_value},
               {"null_ks_inconclusive", m.ks_null.inconclusive()}};
    if (m.metric == Metric::edge_weight) entry["union_with_zeros"] = corr(m.edge_union);
    metrics[std::string(to_string(m.metric))] = std::move(entry);
  }
  return Json{{"metrics", std::move(metrics)}};
}

std::string boxplot_header() {
  return "instance,metric,pearson,spearman,null_pearson,null_spearman,ks_statistic,ks_p_value,"
         "ks_inconclusive,null_ks_inconclusive\n";
}

std::string boxplot_rows(std::size_t instance, const ComparisonReport& r) {
  std::ostringstream out;
  for (const MetricComparison& m : r.metrics) {
    const std::optional<double> pearsons[] = {m.a_vs_null_b.pearson, m.b_vs_null_a.pearson};
    const std::optional<double> spearmans[] = {m.a_vs_null_b.spearman, m.b_vs_null_a.spearman};
    out << instance << ',' << to_string(m.metric) << ',' << format_optional(m.direct.pearson) << ','
        << format_optional(m.direct.spearman) << ',' << format_optional(mean_defined(pearsons)) << ','
        << format_optional(mean_defined(spearmans)) << ',' << format_real(m.ks.statistic) << ','
        << format_real(m.ks.p_value) << ',' << (m.ks.inconclusive() ? 1 : 0) << ','
        << (m.ks_null.inconclusive() ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string timing_header() { return std::string(kTimingHeader) + '\n'; }

std::string timing_row(const TimingRow& row) {
  std::ostringstream out;
  out << row.model << ',' << row.n << ',' << row.k << ',' << format_real(row.p) << ',' << row.seed
      << ',' << format_real(row.loose_ms) << ',' << format_real(row.minimal_ms) << '\n';
  return out.str();
}

std::vector<TimingRow> parse_timing_csv(std::string_view text) {
  std::vector<TimingRow> rows;
  for (const auto& [number, line] : data_lines(text, kTimingHeader)) {
    const auto f = expect_fields(line, 7, number);
    TimingRow r;
    r.model = std::string(f[0]);
    r.n = parse_number<std::size_t>(f[1], number);
    r.k = parse_number<std::size_t>(f[2], number);
    r.p = parse_real(f[3], number);
    r.seed = parse_number<std::uint64_t>(f[4], number);
    r.loose_ms = parse_real(f[5], number);
    r.minimal_ms = parse_real(f[6], number);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace minscaffold
