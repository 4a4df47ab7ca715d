#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wrd/graph.hpp"
#include "wrd/roman.hpp"

namespace wrd {

// Closed forms for graph families. Each takes raw weight lists; vertex i of
// the corresponding generated graph carries weights[i].

struct FamilyResult {
  Rational value;
  RomanLabeling witness;
};

/// K_n, n >= 2: 2 * min w, realised by a 2 on the first lightest vertex.
FamilyResult gamma_wR_complete(std::span<const Rational> weights);

/// K_{s,t} with classes X and Y. The witness lists X first, then Y, in
/// input order. The smaller class plays the role of X in the closed form;
/// both classes are sorted by weight internally.
FamilyResult gamma_wR_complete_bipartite(std::span<const Rational> x_weights,
                                         std::span<const Rational> y_weights);

/// K_{1,t}: center first, then leaves.
FamilyResult gamma_wR_star(const Rational& center, std::span<const Rational> leaves);

/// One rotation f_m of the periodic labeling used to bound cycles.
struct CycleConstruction {
  std::size_t start;  // m, 1-based
  RomanLabeling labeling;
  Rational weight;
  std::size_t residue;  // n mod 3
};

/// f_1..f_n on the cycle u_1 u_2 ... u_n u_1 (vertex i-1 is u_i), with
/// k = floor(n/3):
///   n = 3k:    2 on u_{m+3i},   i = 0..k-1
///   n = 3k+1:  1 on u_m, 2 on u_{m+2+3i}, i = 0..k-1
///   n = 3k+2:  2 on u_{m+3i},   i = 0..k
/// indices taken cyclically.
std::vector<CycleConstruction> cycle_constructions(std::span<const Rational> weights);

/// Sum over m of f_m(V) equals this multiple of w(C_n): 2k, 2k+1 or 2k+2.
std::size_t cycle_construction_coefficient(std::size_t n);

struct CycleBound {
  Rational formula;                      // (1 - k/n) w(C_n)
  Rational constructive;                 // min over m of f_m(V)
  CycleConstruction best_construction;   // first minimiser
};

CycleBound cycle_upper_bound(std::span<const Rational> weights);

/// ceil(2n/3) * p, the value on a cycle with constant weight p.
Rational gamma_wR_equal_cycle(std::size_t n, const Rational& p);

}  // namespace wrd
