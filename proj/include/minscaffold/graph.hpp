#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minscaffold/rational.hpp"

namespace minscaffold {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Invariant violation in graph data (self-loop, negative weight, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational w;
};

/// Undirected, non-negatively weighted graph on vertices 0..n-1.
///
/// Edges are kept canonical: u < v, sorted by (u, v), no duplicates. The
/// constructor enforces this, so two graphs with the same edge set compare
/// equal regardless of how they were written down.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Swaps endpoints into u < v and sorts. Identical duplicates collapse;
  /// duplicates with different weights, self-loops, out-of-range ids and
  /// negative weights throw GraphError.
  WeightedGraph(std::size_t n_vertices, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Optional side table of display labels; empty or one per vertex.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(VertexId v) const;

  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const;

  /// Distinct weights, ascending.
  std::vector<Rational> distinct_weights() const;
  Rational max_weight() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n_vertices_ != b.n_vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge& x = a.edges_[i];
      const Edge& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
    }
    return true;
  }

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// `u,v,w` lines, `#` comments, optional first line JSON header
/// `{"n_vertices": N, "labels": [...]}`. Throws ParseError with a line number.
WeightedGraph parse_edge_list(std::string_view text);

/// Square symmetric matrix (comma or whitespace separated). Entry 0 means no
/// edge; the diagonal is ignored. Asymmetry above 1e-12 is an error.
WeightedGraph parse_adjacency(std::string_view text);

/// Edge-list CSV that parse_edge_list reads back to an equal graph.
std::string serialize_edge_list(const WeightedGraph& g);

enum class Orientation { ascending, descending };

/// ascending: identity. descending: w -> w_max - w, so the heaviest edge
/// enters the filtration first; ties are preserved exactly.
WeightedGraph orient_filtration(const WeightedGraph& g, Orientation direction);

/// Applies a vertex permutation (new id = perm[old id]); labels follow.
WeightedGraph relabel_vertices(const WeightedGraph& g, std::span<const VertexId> perm);

/// Complete weighted graph from a symmetric affinity matrix (e.g. a
/// correlation matrix): weight = a_max - a[i][j] over the off-diagonal
/// entries, so the strongest affinity enters the filtration first. Entries
/// are quantized to 12 decimals before the exact subtraction.
WeightedGraph affinity_to_graph(std::span<const double> matrix, std::size_t n);

/// Sublevel filtration of a weighted graph by edge weight.
///
/// Steps are the distinct edge weights in increasing order; an edge belongs
/// to every step at or after its own. Cycle lengths are measured with a
/// separate per-edge length vector (defaults to the weights themselves)
/// converted to exact int64 units of a common denominator.
class Filtration {
 public:
  Filtration() = default;
  explicit Filtration(WeightedGraph graph);
  Filtration(WeightedGraph graph, std::vector<Rational> lengths);

  const WeightedGraph& graph() const { return graph_; }
  /// Number of steps M. An edgeless graph gets the single step {0}.
  std::size_t size() const { return steps_.size(); }
  const std::vector<Rational>& steps() const { return steps_; }
  const Rational& threshold(std::size_t step) const { return steps_[step]; }
  /// Index of the first step containing edge `e`.
  std::size_t edge_step(std::size_t e) const { return edge_step_[e]; }
  std::int64_t length_units(std::size_t e) const { return length_units_[e]; }
  /// Rational value of one length unit.
  const Rational& length_unit() const { return length_unit_; }
  Rational length_of_units(std::int64_t units) const { return Rational(units) * length_unit_; }

 private:
  WeightedGraph graph_;
  std::vector<Rational> steps_;
  std::vector<std::size_t> edge_step_;
  std::vector<std::int64_t> length_units_;
  Rational length_unit_{1};
};

Filtration build_filtration(const WeightedGraph& g);

/// Filtration ordered by `g`'s weights with cycle lengths from `lengths`
/// (one per edge of g, non-negative).
Filtration build_filtration(const WeightedGraph& g, std::vector<Rational> lengths);

}  // namespace minscaffold
