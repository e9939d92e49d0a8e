#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

namespace oracle {

namespace {

/// Row-reduced basis of a GF(2) span; `reduce` maps a vector to its normal
/// form modulo the span.
struct Gf2Span {
  std::vector<std::uint64_t> rows;  // distinct leading bits, highest bit first

  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t r : rows) {
      if (v & std::bit_floor(r)) v ^= r;
    }
    return v;
  }
  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (!v) return false;
    rows.push_back(v);
    std::sort(rows.begin(), rows.end(), [](std::uint64_t a, std::uint64_t b) { return a > b; });
    return true;
  }
};

int vertex_rank(const SmallComplex& c) {
  // rank of the vertex-edge incidence matrix over GF(2): columns are edges
  Gf2Span span;
  int r = 0;
  for (const auto& [u, v] : c.edges) r += span.insert((1ULL << u) | (1ULL << v));
  return r;
}

}  // namespace

SmallComplex flag_complex(const WeightedGraph& g, const Rational& eps) {
  SmallComplex c;
  c.n = g.n_vertices();
  if (c.n > 64) throw std::invalid_argument("oracle: too many vertices");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
  for (const auto& e : g.edges()) {
    if (e.w > eps) continue;
    index[{e.u, e.v}] = c.edges.size();
    c.edges.push_back({e.u, e.v});
    c.length.push_back(e.w);
  }
  if (c.edges.size() > 64) throw std::invalid_argument("oracle: too many edges");
  for (std::uint32_t a = 0; a < c.n; ++a) {
    for (std::uint32_t b = a + 1; b < c.n; ++b) {
      for (std::uint32_t d = b + 1; d < c.n; ++d) {
        auto ab = index.find({a, b}), ad = index.find({a, d}), bd = index.find({b, d});
        if (ab == index.end() || ad == index.end() || bd == index.end()) continue;
        c.triangle_boundaries.push_back((1ULL << ab->second) | (1ULL << ad->second) | (1ULL << bd->second));
      }
    }
  }
  return c;
}

std::size_t betti1(const SmallComplex& c) {
  Gf2Span boundaries;
  std::size_t rank2 = 0;
  for (std::uint64_t t : c.triangle_boundaries) rank2 += boundaries.insert(t);
  const std::size_t cycle_dim = c.edges.size() - static_cast<std::size_t>(vertex_rank(c));
  return cycle_dim - rank2;
}

BasisOptimum minimal_basis_length(const SmallComplex& c) {
  const std::size_t m = c.edges.size();
  if (m > 22) throw std::invalid_argument("oracle: too many edges to enumerate");
  Gf2Span boundaries;
  for (std::uint64_t t : c.triangle_boundaries) boundaries.insert(t);

  BasisOptimum result;
  result.beta1 = betti1(c);
  if (result.beta1 == 0) return result;

  // Shortest cycle per non-trivial class, keyed by the class normal form.
  std::map<std::uint64_t, Rational> best;
  for (std::uint64_t set = 1; set < (1ULL << m); ++set) {
    std::vector<int> degree(c.n, 0);
    Rational len = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (set >> e & 1) {
        ++degree[c.edges[e].first];
        ++degree[c.edges[e].second];
        len += c.length[e];
      }
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d % 2; })) continue;
    const std::uint64_t cls = boundaries.reduce(set);
    if (!cls) continue;
    auto it = best.find(cls);
    if (it == best.end() || len < it->second) best[cls] = len;
  }

  std::vector<std::pair<Rational, std::uint64_t>> classes;
  for (const auto& [cls, len] : best) classes.push_back({len, cls});
  std::sort(classes.begin(), classes.end());

  // Depth-first search over independent sets in ascending length order; a
  // branch stops once it cannot beat the best complete set.
  std::optional<Rational> optimum;
  std::vector<Gf2Span> stack{Gf2Span{}};
  auto search = [&](auto& self, std::size_t start, std::size_t chosen, const Rational& total) -> void {
    if (chosen == result.beta1) {
      if (!optimum || total < *optimum) optimum = total;
      return;
    }
    for (std::size_t i = start; i + (result.beta1 - chosen) <= classes.size(); ++i) {
      // remaining picks are at least as long as classes[i]
      const Rational bound = total + classes[i].first * static_cast<long long>(result.beta1 - chosen);
      if (optimum && bound >= *optimum) return;
      Gf2Span next = stack.back();
      if (!next.insert(classes[i].second)) continue;
      stack.push_back(std::move(next));
      self(self, i + 1, chosen + 1, total + classes[i].first);
      stack.pop_back();
    }
  };
  search(search, 0, 0, Rational(0));
  if (!optimum) throw std::logic_error("oracle: no independent set of size beta_1");
  result.total_length = *optimum;
  return result;
}

}  // namespace oracle
