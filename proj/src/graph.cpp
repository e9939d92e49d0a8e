#include "minscaffold/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "minscaffold/text.hpp"

namespace minscaffold {

namespace {

using text::split_lines;
using text::trim;

std::optional<std::uint64_t> parse_id(std::string_view s) {
  s = trim(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n_vertices, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : n_vertices_(n_vertices), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_vertices_) {
    throw GraphError("label table has " + std::to_string(labels_.size()) + " entries for " +
                     std::to_string(n_vertices_) + " vertices");
  }
  if (n_vertices_ > std::numeric_limits<VertexId>::max()) throw GraphError("too many vertices");
  for (Edge& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n_vertices_ || e.v >= n_vertices_) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for " + std::to_string(n_vertices_) + " vertices");
    }
    if (e.w < 0) throw GraphError("negative weight on edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edges_.reserve(edges.size());
  for (Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      if (edges_.back().w != e.w) {
        throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") with conflicting weights");
      }
      continue;
    }
    edges_.push_back(std::move(e));
  }
  if (edges_.size() > std::numeric_limits<EdgeIndex>::max()) throw GraphError("too many edges");
}

std::string WeightedGraph::label(VertexId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<EdgeIndex> WeightedGraph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return e.u != key.first ? e.u < key.first : e.v < key.second;
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::vector<Rational> WeightedGraph::distinct_weights() const {
  std::vector<Rational> weights;
  weights.reserve(edges_.size());
  for (const Edge& e : edges_) weights.push_back(e.w);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  return weights;
}

Rational WeightedGraph::max_weight() const {
  Rational best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.w);
  return best;
}

WeightedGraph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared_vertices;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  bool header_allowed = true;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '{') {
      if (!header_allowed) throw ParseError(line_no, "JSON header must precede all edges");
      header_allowed = false;
      nlohmann::json header;
      try {
        header = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& ex) {
        throw ParseError(line_no, std::string("bad JSON header: ") + ex.what());
      }
      if (header.contains("n_vertices")) {
        if (!header["n_vertices"].is_number_unsigned()) {
          throw ParseError(line_no, "n_vertices must be a non-negative integer");
        }
        declared_vertices = header["n_vertices"].get<std::size_t>();
      }
      if (header.contains("labels")) {
        if (!header["labels"].is_array()) throw ParseError(line_no, "labels must be an array");
        for (const auto& l : header["labels"]) {
          labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        }
      }
      continue;
    }
    header_allowed = false;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) throw ParseError(line_no, "expected 'u,v,w'");
    const auto u = parse_id(fields[0]);
    const auto v = parse_id(fields[1]);
    if (!u || !v) throw ParseError(line_no, "vertex ids must be non-negative integers");
    if (*u > std::numeric_limits<VertexId>::max() - 1 || *v > std::numeric_limits<VertexId>::max() - 1) {
      throw ParseError(line_no, "vertex id too large");
    }
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    Rational w;
    try {
      w = parse_decimal(fields[2]);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(line_no, ex.what());
    }
    if (w < 0) throw ParseError(line_no, "negative weight");
    max_id = std::max({max_id, *u, *v});
    any_edge = true;
    edges.push_back({static_cast<VertexId>(*u), static_cast<VertexId>(*v), std::move(w)});
  }

  std::size_t n = any_edge ? static_cast<std::size_t>(max_id) + 1 : 0;
  if (declared_vertices) {
    if (*declared_vertices < n) {
      throw ParseError(0, "header declares " + std::to_string(*declared_vertices) +
                              " vertices but ids reach " + std::to_string(max_id));
    }
    n = *declared_vertices;
  }
  if (!labels.empty() && labels.size() != n) {
    throw ParseError(0, "header has " + std::to_string(labels.size()) + " labels for " +
                            std::to_string(n) + " vertices");
  }
  try {
    return WeightedGraph(n, std::move(edges), std::move(labels));
  } catch (const GraphError& ex) {
    throw ParseError(0, ex.what());
  }
}

WeightedGraph parse_adjacency(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::size_t> row_lines;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> cells;
    if (line.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = line.find(',', start);
        const std::string_view cell =
            trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (cell.empty()) throw ParseError(i + 1, "empty matrix cell");
        cells.push_back(cell);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        cells.push_back(line.substr(pos, end - pos));
        pos = end;
      }
    }
    rows.push_back(std::move(cells));
    row_lines.push_back(i + 1);
  }

  const std::size_t n = rows.size();
  std::vector<Rational> values(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw ParseError(row_lines[r], "matrix is not square: row has " +
                                         std::to_string(rows[r].size()) + " entries, expected " +
                                         std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      try {
        values[r * n + c] = parse_decimal(rows[r][c]);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(row_lines[r], ex.what());
      }
      if (values[r * n + c] < 0 && r != c) throw ParseError(row_lines[r], "negative entry");
    }
  }

  const Rational tolerance(1, BigInt(1000000000000LL));
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const Rational& upper = values[r * n + c];
      const Rational& lower = values[c * n + r];
      const Rational diff = upper > lower ? Rational(upper - lower) : Rational(lower - upper);
      if (diff > tolerance) {
        throw ParseError(row_lines[c], "matrix is not symmetric at (" + std::to_string(r) + "," +
                                           std::to_string(c) + ")");
      }
      if (upper != 0) edges.push_back({static_cast<VertexId>(r), static_cast<VertexId>(c), upper});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

std::string serialize_edge_list(const WeightedGraph& g) {
  std::ostringstream out;
  nlohmann::json header;
  header["n_vertices"] = g.n_vertices();
  if (!g.labels().empty()) header["labels"] = g.labels();
  out << header.dump() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ',' << e.v << ',' << to_decimal_string(e.w, 40) << '\n';
  }
  return out.str();
}

WeightedGraph orient_filtration(const WeightedGraph& g, Orientation direction) {
  if (direction == Orientation::ascending) return g;
  const Rational top = g.max_weight();
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.w = top - e.w;
  return WeightedGraph(g.n_vertices(), std::move(edges), g.labels());
}

WeightedGraph relabel_vertices(const WeightedGraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.n_vertices()) throw GraphError("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (VertexId p : perm) {
    if (p >= perm.size() || seen[p]) throw GraphError("not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(g.n_vertices());
    for (std::size_t v = 0; v < perm.size(); ++v) labels[perm[v]] = g.labels()[v];
  }
  return WeightedGraph(g.n_vertices(), std::move(edges), std::move(labels));
}

WeightedGraph affinity_to_graph(std::span<const double> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw GraphError("matrix size mismatch");
  std::vector<Edge> edges;
  Rational top;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = matrix[i * n + j];
      if (!std::isfinite(a)) throw GraphError("non-finite matrix entry");
      Rational w = quantize_decimal(a, 12);
      if (edges.empty() || w > top) top = w;
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), std::move(w)});
    }
  }
  for (Edge& e : edges) e.w = top - e.w;
  return WeightedGraph(n, std::move(edges));
}

namespace {

std::vector<Rational> weights_of(const WeightedGraph& g) {
  std::vector<Rational> weights;
  weights.reserve(g.n_edges());
  for (const Edge& e : g.edges()) weights.push_back(e.w);
  return weights;
}

}  // namespace

Filtration::Filtration(WeightedGraph graph) : Filtration(graph, weights_of(graph)) {}

Filtration::Filtration(WeightedGraph graph, std::vector<Rational> lengths)
    : graph_(std::move(graph)) {
  if (lengths.size() != graph_.n_edges()) throw GraphError("one length per edge required");
  steps_ = graph_.distinct_weights();
  if (steps_.empty()) steps_.push_back(Rational(0));
  edge_step_.resize(graph_.n_edges());
  for (std::size_t e = 0; e < graph_.n_edges(); ++e) {
    edge_step_[e] = static_cast<std::size_t>(
        std::lower_bound(steps_.begin(), steps_.end(), graph_.edge(e).w) - steps_.begin());
  }

  BigInt common = 1;
  for (const Rational& l : lengths) {
    if (l < 0) throw GraphError("negative cycle length weight");
    common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(l));
  }
  length_unit_ = Rational(BigInt(1), common);
  length_units_.resize(lengths.size());
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max()) /
                       BigInt(std::max<std::size_t>(lengths.size(), 1));
  for (std::size_t e = 0; e < lengths.size(); ++e) {
    const BigInt units = boost::multiprecision::numerator(lengths[e]) *
                         (common / boost::multiprecision::denominator(lengths[e]));
    if (units > limit) {
      throw std::overflow_error("edge lengths too fine-grained for exact 64-bit cycle lengths");
    }
    length_units_[e] = units.convert_to<std::int64_t>();
  }
}

Filtration build_filtration(const WeightedGraph& g) { return Filtration(g); }

Filtration build_filtration(const WeightedGraph& g, std::vector<Rational> lengths) {
  return Filtration(g, std::move(lengths));
}

}  // namespace minscaffold
