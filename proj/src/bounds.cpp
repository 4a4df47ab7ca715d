#include "wrd/bounds.hpp"

#include <algorithm>

#include "wrd/dimacs.hpp"
#include "wrd/errors.hpp"

namespace wrd {

DegreeBound degree_lower_bound(const WeightedGraph& g) {
  if (!is_nontrivial(g))
    throw GraphError(GraphError::Kind::invalid_parameter, "degree bound needs at least one edge");
  DegreeBound out;
  out.raw = 2 * g.total_weight() / (max_weighted_degree(g) + 1);
  auto w = g.weights();
  if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return is_integer(x); }))
    out.ceiled = ceil(out.raw);
  return out;
}

SandwichCheck sandwich_check(const WeightedGraph& g, const SolveOptions& opts) {
  SandwichCheck out;
  out.gamma_w = gamma_w_bruteforce(g, opts.subset_guard).value;
  out.gamma_wR = solve(g, opts).value;
  out.lower_ok = out.gamma_w <= out.gamma_wR;
  out.upper_ok = out.gamma_wR <= 2 * out.gamma_w;
  out.edgeless = !is_nontrivial(g);
  out.characterization_ok = (out.gamma_w == out.gamma_wR) == out.edgeless;
  return out;
}

Rational weight_upper_bound(const WeightedGraph& g) {
  if (g.size() < 2)
    throw GraphError(GraphError::Kind::invalid_parameter, "weight bound is stated for n >= 2");
  return g.total_weight();
}

bool is_thp_extremal(const WeightedGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 1) return false;
    if (g.degree(v) == 1) {
      Vertex u = g.neighbors(v)[0];
      if (g.degree(u) != 1 || g.weight(u) != g.weight(v)) return false;
    }
  }
  return true;
}

NordhausGaddum nordhaus_gaddum(const WeightedGraph& g, const SolveOptions& opts) {
  NordhausGaddum out;
  const WeightedGraph gc = complement(g);
  out.applicable = g.size() >= 3 && is_nontrivial(g) && is_nontrivial(gc);
  if (!out.applicable) return out;
  out.lower = 4 * min_of(g.weights());
  out.sum = solve(g, opts).value + solve(gc, opts).value;
  out.upper = 2 * g.total_weight();
  out.lower_ok = out.lower <= out.sum;
  out.upper_ok = out.sum < out.upper;
  return out;
}

BoundsReport bounds_report(const WeightedGraph& g, const SolveOptions& opts) {
  BoundsReport r;
  r.weight_upper_bound = g.total_weight();
  r.normed = is_normed(g);
  r.thp_extremal = is_thp_extremal(g);
  if (is_nontrivial(g)) {
    auto d = degree_lower_bound(g);
    r.degree_lower_bound = d.raw;
    r.ceiled_degree_lower_bound = d.ceiled;
  }

  try {
    r.gamma_w = gamma_w_bruteforce(g, opts.subset_guard).value;
  } catch (const SizeGuardError&) {
  }
  try {
    r.gamma_wR = solve(g, opts).value;
  } catch (const SizeGuardError&) {
    if (g.size() <= 64) {
      SolveOptions bnb = opts;
      bnb.method = Method::bnb;
      r.gamma_wR = solve(g, bnb).value;
    }
  }
  if (r.gamma_w && r.gamma_wR) {
    r.sandwich_ok = *r.gamma_w <= *r.gamma_wR && *r.gamma_wR <= 2 * *r.gamma_w;
    r.empty_characterization_ok = (*r.gamma_w == *r.gamma_wR) == !is_nontrivial(g);
  }

  if (r.gamma_wR) {
    const Rational& gamma = *r.gamma_wR;
    if (r.degree_lower_bound) {
      r.degree_ok = gamma >= *r.degree_lower_bound &&
                    (!r.ceiled_degree_lower_bound || gamma >= *r.ceiled_degree_lower_bound);
    }
    r.weight_ok = gamma <= r.weight_upper_bound;
    r.extremal_ok = (gamma == r.weight_upper_bound) == r.thp_extremal;
    try {
      r.nordhaus_gaddum = nordhaus_gaddum(g, opts);
    } catch (const SizeGuardError&) {
    }
  }

  if (!r.ok()) {
    std::string failed;
    auto note = [&](bool ok, const char* name) {
      if (!ok) failed += failed.empty() ? name : std::string(", ") + name;
    };
    note(r.sandwich_ok, "sandwich");
    note(r.empty_characterization_ok, "empty-graph characterization");
    note(r.degree_ok, "degree lower bound");
    note(r.weight_ok, "weight upper bound");
    note(r.extremal_ok, "weight-bound extremal characterization");
    note(!r.nordhaus_gaddum || r.nordhaus_gaddum->ok(), "Nordhaus-Gaddum");
    throw TheoremViolation(failed, serialize_dimacs(g));
  }
  return r;
}

}  // namespace wrd
