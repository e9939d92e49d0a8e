#pragma once

#include <cstdint>
#include <vector>

#include "minscaffold/complex.hpp"

namespace minscaffold {

/// A 1-cycle of a flag complex: sorted complex edge ids and its exact
/// length in the complex's length units.
///
/// Complex edge ids are stable along a filtration (the edge list of step s
/// is a prefix of the list at step s + 1), so a cycle can be read in any
/// later complex of the same filtration.
struct Cycle {
  std::vector<std::uint32_t> edges;
  std::int64_t length = 0;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Builds a cycle from edge ids (sorted; the length is summed from `cx`).
Cycle make_cycle(const FlagComplex2& cx, std::vector<std::uint32_t> edges);

/// True when every vertex touched has even degree in the edge set.
bool is_one_cycle(const FlagComplex2& cx, const std::vector<std::uint32_t>& edges);

/// Canonical order: by length, then lexicographically by edge set.
inline bool canonical_less(const Cycle& a, const Cycle& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.edges < b.edges;
}

}  // namespace minscaffold
