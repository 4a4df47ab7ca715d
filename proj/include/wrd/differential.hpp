#pragma once

#include <cstddef>

#include "wrd/graph.hpp"

namespace wrd {

/// Default cap on n for 2^n subset enumeration.
inline constexpr std::size_t default_subset_guard = 20;

struct DifferentialResult {
  VertexSet best_set;
  Rational value;  // w(boundary) - w(best_set)
  VertexSet boundary;
};

/// B(S): vertices outside S with a neighbor in S.
VertexSet boundary(const WeightedGraph& g, const VertexSet& s);

/// w(B(S)) - w(S); may be negative.
Rational differential_of_set(const WeightedGraph& g, const VertexSet& s);

/// max over all S (including the empty set) of w(B(S)) - w(S).
///
/// Subsets are visited in reflected Gray-code order, so each step toggles a
/// single vertex and the boundary weight is updated from per-vertex counts
/// of neighbors inside S. Ties go to the smaller set, then to the
/// lexicographically smaller sorted member list.
DifferentialResult differential_of_graph(const WeightedGraph& g,
                                         std::size_t guard = default_subset_guard);

}  // namespace wrd
