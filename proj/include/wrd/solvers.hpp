#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrd/differential.hpp"
#include "wrd/graph.hpp"
#include "wrd/roman.hpp"

namespace wrd {

enum class Method { brute, bnb, dp, diff };

Method parse_method(std::string_view name);
std::string to_string(Method m);

struct SolveOptions {
  Method method = Method::brute;
  bool enumerate_all_optima = false;
  /// Return the optimum with fewest 1-labels (then lexicographically smallest).
  bool tie_break_min_v1 = false;
  std::size_t labeling_guard = 14;                   // cap on n for 3^n search
  std::size_t subset_guard = default_subset_guard;  // cap on n for 2^n search
};

struct SolveResult {
  Rational value;
  RomanLabeling witness;
  Method method = Method::brute;
  /// Every minimum-weight wRDF, lexicographically sorted, when requested.
  std::optional<std::vector<RomanLabeling>> all_optima;
};

struct DominationResult {
  Rational value;
  VertexSet witness;
};

/// Exhaustive search over all 3^n labelings in lexicographic order with
/// committed-weight pruning. Without tie-breaking options the witness is
/// the lexicographically smallest optimal labeling.
SolveResult gamma_wR_bruteforce(const WeightedGraph& g, const SolveOptions& opts = {});

/// Minimum-weight dominating set by 2^n enumeration. Ties prefer smaller
/// cardinality, then the lexicographically smaller member list.
DominationResult gamma_w_bruteforce(const WeightedGraph& g,
                                    std::size_t guard = default_subset_guard);

/// w(G) - ∂(G), with witness 2 on the maximizing set, 0 on its boundary and
/// 1 elsewhere.
SolveResult gamma_wR_via_differential(const WeightedGraph& g, const SolveOptions& opts = {});

/// Linear-time exact solver for graphs of maximum degree <= 2 (disjoint
/// paths and cycles). Throws GraphError(invalid_parameter) otherwise.
SolveResult gamma_wR_dp(const WeightedGraph& g);

/// Depth-first branch-and-bound for n <= 64. Branches on the undecided
/// vertex of largest residual weighted degree with labels tried as 2, 0, 1.
/// The witness is the first optimum reached in that search order.
SolveResult gamma_wR_branch_and_bound(const WeightedGraph& g, const SolveOptions& opts = {});

/// Brute force returning every optimal labeling in `all_optima`.
SolveResult enumerate_all_optima(const WeightedGraph& g, const SolveOptions& opts = {});

/// Dispatches on opts.method. With enumerate_all_optima set, the exhaustive
/// enumerator runs regardless of method.
SolveResult solve(const WeightedGraph& g, const SolveOptions& opts = {});

}  // namespace wrd
