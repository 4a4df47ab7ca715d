#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "wrd/rational.hpp"

namespace wrd {

/// Vertices are 0-based and contiguous inside the library. Text formats
/// and CLI output are 1-based.
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  /// Members are the set bits of `mask`.
  static VertexSet from_mask(std::uint64_t mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  /// Throws GraphError(vertex_out_of_range) unless every member is < n.
  void check_range(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph with strictly positive rational vertex weights.
/// Immutable once built.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t size() const { return weights_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const Rational& weight(Vertex v) const { return weights_[v]; }
  std::span<const Rational> weights() const { return weights_; }
  const Rational& total_weight() const { return total_; }

  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.weights_ == b.weights_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend WeightedGraph build_graph(std::size_t, std::span<const Edge>, std::span<const Rational>);

  std::vector<Rational> weights_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  Rational total_ = 0;
};

/// Validates and builds a graph. Errors (GraphError kinds): arity_mismatch,
/// vertex_out_of_range, loop_edge, duplicate_edge, non_positive_weight.
WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges,
                          std::span<const Rational> weights);

inline WeightedGraph build_graph(std::size_t n, std::initializer_list<Edge> edges,
                                 std::initializer_list<Rational> weights) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()),
                     std::span<const Rational>(weights.begin(), weights.size()));
}

/// w(S)
Rational weight_of(const WeightedGraph& g, const VertexSet& s);

/// d_w(v) = w(N(v)) / w(v); zero for isolated vertices.
Rational weighted_degree(const WeightedGraph& g, Vertex v);
Rational max_weighted_degree(const WeightedGraph& g);
Rational min_weighted_degree(const WeightedGraph& g);

inline const Rational& total_weight(const WeightedGraph& g) { return g.total_weight(); }

/// w(G) == |V|
bool is_normed(const WeightedGraph& g);

/// A graph is non-trivial when it has at least one edge.
inline bool is_nontrivial(const WeightedGraph& g) { return g.edge_count() > 0; }

WeightedGraph complement(const WeightedGraph& g);

/// G[S] with vertices renumbered in increasing order of S.
WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

/// Vertices of `b` are appended after those of `a`.
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g);

std::size_t max_degree(const WeightedGraph& g);

/// Adjacency bitmasks; requires n <= 64.
std::vector<std::uint64_t> neighbor_masks(const WeightedGraph& g);

}  // namespace wrd
