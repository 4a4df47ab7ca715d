#include "wrd/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "wrd/errors.hpp"

namespace wrd {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_range(std::size_t n) const {
  if (!members_.empty() && members_.back() >= n)
    throw GraphError(GraphError::Kind::vertex_out_of_range,
                     "vertex " + std::to_string(members_.back()) + " out of range for n = " +
                         std::to_string(n));
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges,
                          std::span<const Rational> weights) {
  using Kind = GraphError::Kind;
  if (weights.size() != n)
    throw GraphError(Kind::arity_mismatch, "expected " + std::to_string(n) + " weights, got " +
                                               std::to_string(weights.size()));
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(weights[i]) <= 0)
      throw GraphError(Kind::non_positive_weight,
                       "weight of vertex " + std::to_string(i) + " is not positive");

  WeightedGraph g;
  g.weights_.assign(weights.begin(), weights.end());
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError(Kind::vertex_out_of_range,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw GraphError(Kind::loop_edge, "loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw GraphError(Kind::duplicate_edge, "duplicate edge");
  }
  g.edge_count_ = edges.size();
  g.total_ = sum(g.weights_);
  return g;
}

Rational weight_of(const WeightedGraph& g, const VertexSet& s) {
  s.check_range(g.size());
  Rational total = 0;
  for (Vertex v : s) total += g.weight(v);
  return total;
}

Rational weighted_degree(const WeightedGraph& g, Vertex v) {
  if (v >= g.size())
    throw GraphError(GraphError::Kind::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " out of range");
  Rational nbr = 0;
  for (Vertex u : g.neighbors(v)) nbr += g.weight(u);
  return nbr / g.weight(v);
}

namespace {

template <class Pick>
Rational extreme_degree(const WeightedGraph& g, Pick pick) {
  if (g.size() == 0) throw GraphError(GraphError::Kind::empty_graph, "graph has no vertices");
  Rational best = weighted_degree(g, 0);
  for (Vertex v = 1; v < g.size(); ++v) {
    Rational d = weighted_degree(g, v);
    if (pick(d, best)) best = d;
  }
  return best;
}

}  // namespace

Rational max_weighted_degree(const WeightedGraph& g) {
  return extreme_degree(g, [](const Rational& a, const Rational& b) { return a > b; });
}

Rational min_weighted_degree(const WeightedGraph& g) {
  return extreme_degree(g, [](const Rational& a, const Rational& b) { return a < b; });
}

bool is_normed(const WeightedGraph& g) {
  return g.total_weight() == Rational(static_cast<unsigned long>(g.size()));
}

WeightedGraph complement(const WeightedGraph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return build_graph(g.size(), edges, g.weights());
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
  s.check_range(g.size());
  std::vector<std::size_t> index(g.size(), g.size());
  std::vector<Rational> weights;
  for (Vertex v : s) {
    index[v] = weights.size();
    weights.push_back(g.weight(v));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (index[u] < g.size() && index[v] < g.size()) edges.emplace_back(index[u], index[v]);
  return build_graph(weights.size(), edges, weights);
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  std::vector<Rational> weights(a.weights().begin(), a.weights().end());
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return build_graph(weights.size(), edges, weights);
}

std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.size(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t max_degree(const WeightedGraph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.size(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<std::uint64_t> neighbor_masks(const WeightedGraph& g) {
  if (g.size() > 64)
    throw GraphError(GraphError::Kind::invalid_parameter, "bitmask adjacency needs n <= 64");
  std::vector<std::uint64_t> masks(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex u : g.neighbors(v)) masks[v] |= std::uint64_t{1} << u;
  return masks;
}

}  // namespace wrd
