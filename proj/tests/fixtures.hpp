#pragma once

#include <string_view>
#include <vector>

#include "wrd/graph.hpp"

namespace fx {

using wrd::Edge;
using wrd::Rational;
using wrd::Vertex;
using wrd::WeightedGraph;

inline std::vector<Rational> w(std::initializer_list<std::string_view> items) {
  std::vector<Rational> out;
  for (auto s : items) out.push_back(wrd::parse_rational(s));
  return out;
}

inline std::vector<Rational> wi(std::initializer_list<long> items) {
  std::vector<Rational> out;
  for (long x : items) out.emplace_back(x);
  return out;
}

inline WeightedGraph path(const std::vector<Rational>& ws) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < ws.size(); ++v) e.emplace_back(v, v + 1);
  return wrd::build_graph(ws.size(), e, ws);
}

inline WeightedGraph cycle(const std::vector<Rational>& ws) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < ws.size(); ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, ws.size() - 1);
  return wrd::build_graph(ws.size(), e, ws);
}

inline WeightedGraph complete(const std::vector<Rational>& ws) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < ws.size(); ++u)
    for (Vertex v = u + 1; v < ws.size(); ++v) e.emplace_back(u, v);
  return wrd::build_graph(ws.size(), e, ws);
}

inline WeightedGraph edgeless(const std::vector<Rational>& ws) { return wrd::build_graph(ws.size(), {}, ws); }

inline WeightedGraph bipartite(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  std::vector<Rational> ws = xs;
  ws.insert(ws.end(), ys.begin(), ys.end());
  std::vector<Edge> e;
  for (Vertex u = 0; u < xs.size(); ++u)
    for (Vertex v = xs.size(); v < ws.size(); ++v) e.emplace_back(u, v);
  return wrd::build_graph(ws.size(), e, ws);
}

}  // namespace fx
