#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wrd/graph.hpp"

namespace wrd {

// Randomness is drawn from std::mt19937_64, whose output sequence is fixed
// by the C++ standard. Bounded integers come from rejection sampling on the
// raw 64-bit words rather than std::uniform_int_distribution (whose
// algorithm is implementation-defined), so corpora are identical across
// toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform integer in [lo, hi].
std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi);

/// True with probability exactly p (0 <= p <= 1).
bool bernoulli(Rng& rng, const Rational& p);

/// splitmix64 mix of (seed, index); used to give each corpus trial its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct ConstantWeight {
  Rational value{1};
};

struct IntegerUniform {
  std::int64_t lo = 1;
  std::int64_t hi = 9;
};

/// Uniform over the grid {k/denominator : lo <= k/denominator <= hi}.
struct RationalGrid {
  std::int64_t denominator = 3;
  Rational lo{1, 3};
  Rational hi{3};
};

using WeightSampler = std::variant<ConstantWeight, IntegerUniform, RationalGrid>;

Rational sample_weight(Rng& rng, const WeightSampler& sampler);

/// "const:<q>", "int:<lo>:<hi>" or "grid:<den>:<lo>:<hi>".
WeightSampler parse_sampler(std::string_view text);
std::string to_string(const WeightSampler& sampler);

enum class GraphKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  empty,
  random,
  disjoint_union,
  equal_matching,  // s disjoint edges with equal endpoint weights plus t isolated vertices
};

GraphKind parse_graph_kind(std::string_view name);
std::string to_string(GraphKind kind);

struct GenParams {
  GraphKind kind = GraphKind::random;
  std::size_t n = 0;
  std::size_t s = 0;  // complete_bipartite, equal_matching
  std::size_t t = 0;  // complete_bipartite, star (leaves), equal_matching
  Rational p{1, 2};   // random
  WeightSampler weights = ConstantWeight{};
  std::vector<GenParams> parts;  // disjoint_union
};

/// Deterministic in (params, seed). Weights are drawn in vertex order before
/// any edge coin flips; random edges are flipped for (u, v), u < v, in
/// lexicographic order. Throws GraphError(invalid_parameter) on bad params.
WeightedGraph generate(const GenParams& params, std::uint64_t seed);
WeightedGraph generate(const GenParams& params, Rng& rng);

}  // namespace wrd
