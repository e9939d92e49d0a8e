#include "minscaffold/complex.hpp"

#include <algorithm>
#include <numeric>

namespace minscaffold {

std::optional<std::uint32_t> FlagComplex2::edge_id(VertexId a, VertexId b) const {
  if (a >= n_vertices_ || b >= n_vertices_) return std::nullopt;
  const auto& nbrs = adjacency_[a];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                             [](const auto& entry, VertexId key) { return entry.first < key; });
  if (it == nbrs.end() || it->first != b) return std::nullopt;
  return it->second;
}

Simplex FlagComplex2::edge_simplex(std::uint32_t e) const {
  const ComplexEdge& edge = edges_[e];
  return Simplex{{edge.u, edge.v, 0}, 1, edge.step};
}

Simplex FlagComplex2::triangle_simplex(std::uint32_t t) const {
  const ComplexTriangle& tri = triangles_[t];
  return Simplex{{tri.a, tri.b, tri.c}, 2, tri.step};
}

std::size_t FlagComplex2::connected_components() const {
  std::vector<VertexId> parent(n_vertices_);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_vertices_;
  for (const ComplexEdge& e : edges_) {
    const VertexId a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

FlagComplex2 build_flag_complex(const Filtration& f, std::optional<std::size_t> last_step,
                                Rational epsilon) {
  const WeightedGraph& g = f.graph();
  FlagComplex2 cx;
  cx.n_vertices_ = g.n_vertices();
  cx.epsilon_ = std::move(epsilon);
  cx.length_unit_ = f.length_unit();
  cx.adjacency_.assign(g.n_vertices(), {});

  if (last_step) {
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
      if (f.edge_step(e) > *last_step) continue;
      const Edge& edge = g.edge(e);
      cx.edges_.push_back({edge.u, edge.v, static_cast<EdgeIndex>(e),
                           static_cast<std::uint32_t>(f.edge_step(e)), f.length_units(e)});
    }
  }
  std::stable_sort(cx.edges_.begin(), cx.edges_.end(),
                   [](const ComplexEdge& a, const ComplexEdge& b) {
                     if (a.step != b.step) return a.step < b.step;
                     return a.u != b.u ? a.u < b.u : a.v < b.v;
                   });
  for (std::uint32_t id = 0; id < cx.edges_.size(); ++id) {
    const ComplexEdge& e = cx.edges_[id];
    cx.adjacency_[e.u].emplace_back(e.v, id);
    cx.adjacency_[e.v].emplace_back(e.u, id);
  }
  for (auto& nbrs : cx.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // 3-cliques u < v < w via sorted neighbour intersection.
  for (VertexId u = 0; u < cx.n_vertices_; ++u) {
    const auto& nu = cx.adjacency_[u];
    for (const auto& [v, e_uv] : nu) {
      if (v <= u) continue;
      const auto& nv = cx.adjacency_[v];
      auto iu = std::upper_bound(nu.begin(), nu.end(), v,
                                 [](VertexId key, const auto& entry) { return key < entry.first; });
      auto iv = std::upper_bound(nv.begin(), nv.end(), v,
                                 [](VertexId key, const auto& entry) { return key < entry.first; });
      while (iu != nu.end() && iv != nv.end()) {
        if (iu->first < iv->first) {
          ++iu;
        } else if (iv->first < iu->first) {
          ++iv;
        } else {
          const std::uint32_t e_uw = iu->second, e_vw = iv->second;
          const std::uint32_t step =
              std::max({cx.edges_[e_uv].step, cx.edges_[e_uw].step, cx.edges_[e_vw].step});
          cx.triangles_.push_back({u, v, iu->first, {e_uv, e_uw, e_vw}, step});
          ++iu;
          ++iv;
        }
      }
    }
  }
  // Enumeration is already lexicographic; a stable sort by step keeps that order within a step.
  std::stable_sort(cx.triangles_.begin(), cx.triangles_.end(),
                   [](const ComplexTriangle& a, const ComplexTriangle& b) { return a.step < b.step; });
  return cx;
}

FlagComplex2 flag_complex_at(const Filtration& f, std::size_t step) {
  if (step >= f.size()) throw std::out_of_range("filtration step out of range");
  return build_flag_complex(f, step, f.threshold(step));
}

FlagComplex2 flag_complex_at(const WeightedGraph& g, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("threshold must be non-negative");
  const Filtration f(g);
  std::optional<std::size_t> last;
  if (g.n_edges() > 0) {
    const auto& steps = f.steps();
    const auto it = std::upper_bound(steps.begin(), steps.end(), eps);
    if (it != steps.begin()) last = static_cast<std::size_t>(it - steps.begin()) - 1;
  }
  return build_flag_complex(f, last, eps);
}

std::vector<FlagComplex2> complexes_along(const Filtration& f) {
  std::vector<FlagComplex2> result;
  result.reserve(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) result.push_back(flag_complex_at(f, s));
  return result;
}

bool is_subcomplex(const FlagComplex2& a, const FlagComplex2& b) {
  if (a.n_vertices() > b.n_vertices()) return false;
  for (const ComplexEdge& e : a.edges()) {
    if (!b.edge_id(e.u, e.v)) return false;
  }
  for (const ComplexTriangle& t : a.triangles()) {
    // Flag complexes: a triangle is present iff its three edges are.
    if (!b.edge_id(t.a, t.b) || !b.edge_id(t.a, t.c) || !b.edge_id(t.b, t.c)) return false;
  }
  return true;
}

}  // namespace minscaffold
