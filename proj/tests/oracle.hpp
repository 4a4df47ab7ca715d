#pragma once

// Deliberately naive reference implementations used only by tests. They
// share no code with the solvers: plain base-3 / base-2 counting over every
// labeling or subset, with exact rationals throughout.

#include <cstdint>
#include <vector>

#include "wrd/graph.hpp"
#include "wrd/roman.hpp"

namespace oracle {

using wrd::Rational;
using wrd::WeightedGraph;

inline std::vector<std::vector<bool>> adjacency(const WeightedGraph& g) {
  std::vector<std::vector<bool>> a(g.size(), std::vector<bool>(g.size(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

struct RomanOracle {
  Rational value;
  std::vector<std::vector<int>> optima;  // ascending counter order = lexicographic
};

inline RomanOracle roman(const WeightedGraph& g) {
  const std::size_t n = g.size();
  const auto a = adjacency(g);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  RomanOracle out;
  bool have = false;
  std::vector<int> f(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {  // vertex 0 is the most significant digit
      f[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (f[v] != 0) continue;
      bool hit = false;
      for (std::size_t u = 0; u < n; ++u) hit = hit || (a[v][u] && f[u] == 2);
      ok = hit;
    }
    if (!ok) continue;
    Rational w = 0;
    for (std::size_t v = 0; v < n; ++v) w += g.weight(v) * f[v];
    if (!have || w < out.value) {
      out.value = w;
      out.optima.clear();
      have = true;
    }
    if (w == out.value) out.optima.push_back(f);
  }
  return out;
}

inline bool dominates(const std::vector<std::vector<bool>>& a, std::uint64_t mask, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    if (mask >> v & 1) continue;
    bool hit = false;
    for (std::size_t u = 0; u < n; ++u) hit = hit || (a[v][u] && (mask >> u & 1));
    if (!hit) return false;
  }
  return true;
}

inline Rational domination(const WeightedGraph& g) {
  const std::size_t n = g.size();
  const auto a = adjacency(g);
  Rational best = g.total_weight();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!dominates(a, mask, n)) continue;
    Rational w = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) w += g.weight(v);
    if (w < best) best = w;
  }
  return best;
}

inline Rational differential(const WeightedGraph& g) {
  const std::size_t n = g.size();
  const auto a = adjacency(g);
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational d = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) {
        d -= g.weight(v);
        continue;
      }
      for (std::size_t u = 0; u < n; ++u)
        if (a[v][u] && (mask >> u & 1)) {
          d += g.weight(v);
          break;
        }
    }
    if (d > best) best = d;
  }
  return best;
}

inline std::vector<int> labels(const wrd::RomanLabeling& f) {
  return std::vector<int>(f.labels().begin(), f.labels().end());
}

}  // namespace oracle
