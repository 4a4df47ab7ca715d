#pragma once

#include <optional>
#include <string>

#include "wrd/graph.hpp"
#include "wrd/solvers.hpp"

namespace wrd {

struct DegreeBound {
  Rational raw;                    // 2 w(G) / (Δ_w + 1)
  std::optional<Rational> ceiled;  // only when every weight is an integer
};

/// Lower bound on γ_wR for graphs with at least one edge; throws
/// GraphError(invalid_parameter) on edgeless graphs.
DegreeBound degree_lower_bound(const WeightedGraph& g);

struct SandwichCheck {
  Rational gamma_w;
  Rational gamma_wR;
  bool lower_ok = false;           // γ_w <= γ_wR
  bool upper_ok = false;           // γ_wR <= 2 γ_w
  bool edgeless = false;
  bool characterization_ok = false;  // (γ_w == γ_wR) == edgeless

  bool ok() const { return lower_ok && upper_ok && characterization_ok; }
};

/// Exact γ_w and γ_wR with both inequalities and the edgeless
/// characterization evaluated. Throws SizeGuardError beyond the guards.
SandwichCheck sandwich_check(const WeightedGraph& g, const SolveOptions& opts = {});

/// w(G); requires n >= 2.
Rational weight_upper_bound(const WeightedGraph& g);

/// Every component is an isolated vertex or a single edge with equal
/// endpoint weights. Purely structural.
bool is_thp_extremal(const WeightedGraph& g);

struct NordhausGaddum {
  bool applicable = false;  // n >= 3 and both G and its complement have an edge
  Rational lower;           // 4 min w
  Rational sum;             // γ_wR(G) + γ_wR(complement)
  Rational upper;           // 2 w(G), strict
  bool lower_ok = false;
  bool upper_ok = false;

  bool ok() const { return !applicable || (lower_ok && upper_ok); }
};

NordhausGaddum nordhaus_gaddum(const WeightedGraph& g, const SolveOptions& opts = {});

struct BoundsReport {
  std::optional<Rational> gamma_w;
  std::optional<Rational> gamma_wR;
  std::optional<Rational> degree_lower_bound;
  std::optional<Rational> ceiled_degree_lower_bound;
  Rational weight_upper_bound;
  bool normed = false;
  bool thp_extremal = false;
  bool sandwich_ok = true;
  bool empty_characterization_ok = true;
  bool degree_ok = true;
  bool weight_ok = true;
  bool extremal_ok = true;  // (γ_wR == w(G)) == thp_extremal
  std::optional<NordhausGaddum> nordhaus_gaddum;

  bool ok() const {
    return sandwich_ok && empty_characterization_ok && degree_ok && weight_ok && extremal_ok &&
           (!nordhaus_gaddum || nordhaus_gaddum->ok());
  }
};

/// Evaluates every bound. Exact values are included when the graph fits the
/// solver guards. A failed check with exact values present throws
/// TheoremViolation carrying the graph in weighted-DIMACS form.
BoundsReport bounds_report(const WeightedGraph& g, const SolveOptions& opts = {});

}  // namespace wrd
