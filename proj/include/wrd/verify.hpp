#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wrd/generate.hpp"
#include "wrd/graph.hpp"
#include "wrd/solvers.hpp"

namespace wrd {

// Theorem-verification harness. Every check runs on exact solver output;
// any failure is a bug in this library and comes with a replayable graph.
//
// Checks over "every optimal labeling" use the full list from
// enumerate_all_optima. The V1-independence claim is an existence claim and
// is checked on the optima that minimise |V1|.

struct Counterexample {
  std::string graph;         // weighted-DIMACS text of the failing graph
  std::string shrunk_graph;  // smallest failing graph found by greedy deletion
  std::string witnesses;     // labelings / sets involved, one per line
  std::optional<std::uint64_t> seed;
};

struct TheoremCheck {
  std::string id;
  bool applicable = false;
  bool passed = true;
  std::string detail;
  std::optional<Counterexample> counterexample;
  std::size_t trial = 0;
};

struct TheoremTally {
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::vector<TheoremCheck> checks;  // one record per theorem per trial, in trial order
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
  std::map<std::string, TheoremTally> tally() const;
  const TheoremCheck* find(const std::string& id, std::size_t trial = 0) const;
};

enum class Fault {
  none,
  /// Harness self-test: slips an all-zero labeling into the reported optima.
  understate_optimum,
};

struct VerifyOptions {
  SolveOptions solve;
  bool shrink = true;
  Fault fault = Fault::none;
  /// When set, failing graphs are written here as weighted-DIMACS files.
  std::optional<std::string> failure_dir;
};

/// Runs every applicable check on one graph. Throws SizeGuardError if the
/// graph exceeds the exhaustive solver guards.
VerificationReport verify_graph(const WeightedGraph& g, const VerifyOptions& opts = {});

enum class CorpusFamily {
  random,         // G(n, p)
  thp_extremal,   // disjoint equal-weight edges plus isolated vertices
};

struct CorpusParams {
  std::size_t n_min = 3;
  std::size_t n_max = 9;
  Rational edge_probability{1, 2};
  /// Trial i draws weights from samplers[i % samplers.size()].
  std::vector<WeightSampler> samplers{IntegerUniform{1, 9}};
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  CorpusFamily family = CorpusFamily::random;
};

/// The graph used for trial `index`; a pure function of (params, index).
WeightedGraph corpus_graph(const CorpusParams& params, std::size_t index);

VerificationReport verify_corpus(const CorpusParams& params, const VerifyOptions& opts = {});

/// Cycle bound and equality characterization on C_n for n in [n_min, n_max]:
/// per n and trial, a constant weighting, a one-vertex perturbation of it,
/// and a random integer weighting. Includes the non-constant hexagon
/// (1,2,3,3,2,1) attaining equality when 6 is in range.
VerificationReport verify_cycle_theorems(std::size_t n_min, std::size_t n_max, std::size_t trials,
                                         std::uint64_t seed, const VerifyOptions& opts = {});

/// Greedily deletes vertices, then edges, while `still_fails` holds.
WeightedGraph shrink_counterexample(const WeightedGraph& g,
                                    const std::function<bool(const WeightedGraph&)>& still_fails);

/// Human-readable summary table plus details of failures.
std::string format_report(const VerificationReport& report);

/// Machine-readable JSON document, one record per theorem per trial.
std::string report_to_json(const VerificationReport& report);

}  // namespace wrd
