#include "wrd/roman.hpp"

#include <algorithm>
#include <stdexcept>

#include "wrd/errors.hpp"

namespace wrd {

namespace {

void check_arity(const WeightedGraph& g, const RomanLabeling& f) {
  if (f.size() != g.size())
    throw GraphError(GraphError::Kind::arity_mismatch,
                     "labeling has " + std::to_string(f.size()) + " entries for " +
                         std::to_string(g.size()) + " vertices");
}

}  // namespace

RomanLabeling::RomanLabeling(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  for (auto l : labels_)
    if (l > 2) throw std::invalid_argument("Roman labels must be 0, 1 or 2");
}

RomanLabeling::RomanLabeling(std::initializer_list<int> labels) {
  for (int l : labels) {
    if (l < 0 || l > 2) throw std::invalid_argument("Roman labels must be 0, 1 or 2");
    labels_.push_back(static_cast<std::uint8_t>(l));
  }
}

void RomanLabeling::set(Vertex v, std::uint8_t label) {
  if (label > 2) throw std::invalid_argument("Roman labels must be 0, 1 or 2");
  labels_.at(v) = label;
}

VertexSet RomanLabeling::level(std::uint8_t label) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) out.push_back(v);
  return VertexSet(std::move(out));
}

std::size_t RomanLabeling::count(std::uint8_t label) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

std::string to_string(const RomanLabeling& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + f[i]);
  }
  return out;
}

RomanLabeling parse_labeling(std::string_view text) {
  std::vector<std::uint8_t> labels;
  bool expect_label = true;
  for (char c : text) {
    if (expect_label && c >= '0' && c <= '2') {
      labels.push_back(static_cast<std::uint8_t>(c - '0'));
      expect_label = false;
    } else if (!expect_label && c == ',') {
      expect_label = true;
    } else {
      throw std::invalid_argument("malformed labeling '" + std::string(text) + "'");
    }
  }
  if (expect_label && !labels.empty()) throw std::invalid_argument("trailing comma in labeling");
  return RomanLabeling(std::move(labels));
}

bool is_wrdf(const WeightedGraph& g, const RomanLabeling& f) {
  check_arity(g, f);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (f[v] != 0) continue;
    auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return f[u] == 2; })) return false;
  }
  return true;
}

Rational labeling_weight(const WeightedGraph& g, const RomanLabeling& f) {
  check_arity(g, f);
  Rational total = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (f[v]) total += g.weight(v) * f[v];
  return total;
}

bool is_dominating(const WeightedGraph& g, const VertexSet& d) {
  d.check_range(g.size());
  std::vector<bool> covered(g.size(), false);
  for (Vertex v : d) {
    covered[v] = true;
    for (Vertex u : g.neighbors(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_independent(const WeightedGraph& g, const VertexSet& s) {
  s.check_range(g.size());
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (s.contains(u)) return false;
  return true;
}

}  // namespace wrd
