#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "minscaffold/graph.hpp"

namespace minscaffold {

/// A 1- or 2-simplex of a flag complex. Vertices are strictly increasing;
/// only the first dim+1 entries of `vertices` are meaningful. `step` is the
/// filtration step at which the simplex appears (max over its edges).
struct Simplex {
  std::array<VertexId, 3> vertices{};
  std::uint8_t dim = 0;
  std::uint32_t step = 0;
};

struct ComplexEdge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeIndex graph_edge = 0;  // index into the source graph's edge list
  std::uint32_t step = 0;
  std::int64_t length = 0;   // exact length in filtration units
};

struct ComplexTriangle {
  VertexId a = 0, b = 0, c = 0;
  std::array<std::uint32_t, 3> edges{};  // complex edge ids of ab, ac, bc
  std::uint32_t step = 0;
};

/// Dimension <= 2 flag complex of the graph thresholded at one filtration
/// value. Edges are ordered by (step, u, v) and triangles by (step, a, b, c);
/// positions in these lists are the matrix column / row ids used downstream.
class FlagComplex2 {
 public:
  FlagComplex2() = default;

  std::size_t n_vertices() const { return n_vertices_; }
  const Rational& epsilon() const { return epsilon_; }
  const std::vector<ComplexEdge>& edges() const { return edges_; }
  const std::vector<ComplexTriangle>& triangles() const { return triangles_; }
  std::size_t n_edges() const { return edges_.size(); }
  std::size_t n_triangles() const { return triangles_.size(); }

  /// Complex edge id of {a, b}, if present.
  std::optional<std::uint32_t> edge_id(VertexId a, VertexId b) const;

  /// Neighbours of v with the connecting complex edge id, sorted by vertex.
  const std::vector<std::pair<VertexId, std::uint32_t>>& neighbors(VertexId v) const {
    return adjacency_[v];
  }

  Simplex edge_simplex(std::uint32_t e) const;
  Simplex triangle_simplex(std::uint32_t t) const;

  const Rational& length_unit() const { return length_unit_; }
  Rational length_of_units(std::int64_t units) const { return Rational(units) * length_unit_; }

  /// Number of connected components of the 1-skeleton (isolated vertices count).
  std::size_t connected_components() const;

 private:
  friend FlagComplex2 build_flag_complex(const Filtration&, std::optional<std::size_t>,
                                         Rational);

  std::size_t n_vertices_ = 0;
  Rational epsilon_;
  Rational length_unit_{1};
  std::vector<ComplexEdge> edges_;
  std::vector<ComplexTriangle> triangles_;
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adjacency_;
};

/// Complex at filtration step `step` (every edge with edge_step <= step).
FlagComplex2 flag_complex_at(const Filtration& f, std::size_t step);

/// Complex of `g` at threshold `eps`: edges of weight <= eps and their 3-cliques.
/// Lengths are the weights of g.
FlagComplex2 flag_complex_at(const WeightedGraph& g, const Rational& eps);

/// One complex per filtration step, in order.
std::vector<FlagComplex2> complexes_along(const Filtration& f);

/// Structural inclusion: every edge and triangle of `a` (by vertex tuple) is in `b`.
bool is_subcomplex(const FlagComplex2& a, const FlagComplex2& b);

/// Internal builder; `last_step` empty means "no edges".
FlagComplex2 build_flag_complex(const Filtration& f, std::optional<std::size_t> last_step,
                                Rational epsilon);

}  // namespace minscaffold
