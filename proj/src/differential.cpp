#include "wrd/differential.hpp"

#include <bit>
#include <vector>

#include "wrd/errors.hpp"
#include "subset_order.hpp"

namespace wrd {

VertexSet boundary(const WeightedGraph& g, const VertexSet& s) {
  s.check_range(g.size());
  std::vector<bool> in_s(g.size(), false), in_b(g.size(), false);
  for (Vertex v : s) in_s[v] = true;
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (!in_s[u]) in_b[u] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (in_b[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

Rational differential_of_set(const WeightedGraph& g, const VertexSet& s) {
  return weight_of(g, boundary(g, s)) - weight_of(g, s);
}


DifferentialResult differential_of_graph(const WeightedGraph& g, std::size_t guard) {
  const std::size_t n = g.size();
  if (n > guard) throw SizeGuardError(n, guard, "differential_of_graph");
  if (n > 62) throw SizeGuardError(n, 62, "differential_of_graph");

  const ScaledWeights sw = scale_to_integers(g.weights());
  const auto& w = sw.values;

  std::vector<int> inside_neighbors(n, 0);  // |N(v) ∩ S|
  std::uint64_t set = 0;
  std::int64_t w_set = 0, w_boundary = 0;
  std::int64_t best_value = 0;
  std::uint64_t best_set = 0;

  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto x = static_cast<Vertex>(std::countr_zero(i));
    const std::uint64_t bit = std::uint64_t{1} << x;
    if (!(set & bit)) {
      if (inside_neighbors[x] > 0) w_boundary -= w[x];
      set |= bit;
      w_set += w[x];
      for (Vertex y : g.neighbors(x))
        if (++inside_neighbors[y] == 1 && !(set & (std::uint64_t{1} << y))) w_boundary += w[y];
    } else {
      set &= ~bit;
      w_set -= w[x];
      for (Vertex y : g.neighbors(x))
        if (--inside_neighbors[y] == 0 && !(set & (std::uint64_t{1} << y))) w_boundary -= w[y];
      if (inside_neighbors[x] > 0) w_boundary += w[x];
    }
    const std::int64_t value = w_boundary - w_set;
    if (value > best_value || (value == best_value && detail::subset_preferred(set, best_set))) {
      best_value = value;
      best_set = set;
    }
  }

  DifferentialResult out;
  out.best_set = VertexSet::from_mask(best_set);
  out.boundary = boundary(g, out.best_set);
  out.value = sw.to_rational(best_value);
  return out;
}

}  // namespace wrd
