#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wrd/graph.hpp"

namespace wrd {

/// f : V -> {0,1,2}, stored densely in vertex order.
class RomanLabeling {
 public:
  RomanLabeling() = default;
  explicit RomanLabeling(std::size_t n, std::uint8_t fill = 0) : labels_(n, fill) {}
  /// Throws std::invalid_argument if any label is outside {0,1,2}.
  explicit RomanLabeling(std::vector<std::uint8_t> labels);
  RomanLabeling(std::initializer_list<int> labels);

  std::size_t size() const { return labels_.size(); }
  std::uint8_t operator[](Vertex v) const { return labels_[v]; }
  void set(Vertex v, std::uint8_t label);
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  /// Preimage of `label` (V0, V1 or V2).
  VertexSet level(std::uint8_t label) const;
  std::size_t count(std::uint8_t label) const;

  friend bool operator==(const RomanLabeling&, const RomanLabeling&) = default;
  friend auto operator<=>(const RomanLabeling&, const RomanLabeling&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

/// "2,0,1"
std::string to_string(const RomanLabeling& f);
RomanLabeling parse_labeling(std::string_view text);

/// Every vertex labelled 0 has a neighbor labelled 2.
bool is_wrdf(const WeightedGraph& g, const RomanLabeling& f);

/// f(V) = sum f(u) w(u)
Rational labeling_weight(const WeightedGraph& g, const RomanLabeling& f);

/// N[D] = V
bool is_dominating(const WeightedGraph& g, const VertexSet& d);

bool is_independent(const WeightedGraph& g, const VertexSet& s);

}  // namespace wrd
