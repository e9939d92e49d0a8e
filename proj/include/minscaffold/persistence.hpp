#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "minscaffold/complex.hpp"
#include "minscaffold/cycle.hpp"
#include "minscaffold/graph.hpp"

namespace minscaffold {

/// One bar. Vertices are born at value 0; `death` is empty for essential
/// classes. Generators are edge sets in the final complex of the filtration.
struct PersistencePair {
  int dim = 0;
  Rational birth;
  std::optional<Rational> death;
  std::optional<Cycle> generator;  // dim-1 bars only

  bool essential() const { return !death.has_value(); }
  /// birth <= eps < death
  bool alive_at(const Rational& eps) const { return birth <= eps && (!death || eps < *death); }
};

struct Barcode {
  std::vector<PersistencePair> pairs;

  std::size_t count(int dim) const;
  std::size_t alive_at(int dim, const Rational& eps) const;
};

/// 0- and 1-dimensional persistence of the flag filtration by standard
/// column reduction in (value, dimension, lexicographic) simplex order.
/// Zero-length bars are dropped. Finite dim-1 bars carry the reduced
/// column of the killing triangle as generator; essential dim-1 bars carry
/// the cycle accumulated in the reduction transform of their edge.
Barcode compute_persistence(const Filtration& f);

struct Ph1Generator {
  Cycle cycle;
  Rational birth;
  std::optional<Rational> death;
};

/// One generator per dim-1 bar, ordered by (birth, creating edge).
std::vector<Ph1Generator> ph1_generators(const Filtration& f);

/// beta_1 = (|E| - |V| + #components) - rank(boundary_2).
std::size_t betti1_at(const FlagComplex2& cx);

}  // namespace minscaffold
