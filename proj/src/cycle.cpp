#include "minscaffold/cycle.hpp"

#include <algorithm>

namespace minscaffold {

Cycle make_cycle(const FlagComplex2& cx, std::vector<std::uint32_t> edges) {
  std::sort(edges.begin(), edges.end());
  Cycle c;
  for (std::uint32_t e : edges) c.length += cx.edges().at(e).length;
  c.edges = std::move(edges);
  return c;
}

bool is_one_cycle(const FlagComplex2& cx, const std::vector<std::uint32_t>& edges) {
  std::vector<std::uint8_t> parity(cx.n_vertices(), 0);
  for (std::uint32_t e : edges) {
    if (e >= cx.n_edges()) return false;
    parity[cx.edges()[e].u] ^= 1;
    parity[cx.edges()[e].v] ^= 1;
  }
  return std::none_of(parity.begin(), parity.end(), [](std::uint8_t p) { return p != 0; });
}

}  // namespace minscaffold
