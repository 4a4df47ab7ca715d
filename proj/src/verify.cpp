#include "wrd/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "wrd/bounds.hpp"
#include "wrd/dimacs.hpp"
#include "wrd/differential.hpp"
#include "wrd/errors.hpp"
#include "wrd/families.hpp"

namespace wrd {

std::map<std::string, TheoremTally> VerificationReport::tally() const {
  std::map<std::string, TheoremTally> out;
  for (const auto& c : checks) {
    auto& t = out[c.id];
    if (!c.applicable) continue;
    ++t.applicable;
    ++(c.passed ? t.passed : t.failed);
  }
  return out;
}

const TheoremCheck* VerificationReport::find(const std::string& id, std::size_t trial) const {
  for (const auto& c : checks)
    if (c.id == id && c.trial == trial) return &c;
  return nullptr;
}

namespace {

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

class CheckList {
 public:
  void add(std::string id, bool applicable, bool passed, std::string detail = {},
           std::string witnesses = {}) {
    TheoremCheck c;
    c.id = std::move(id);
    c.applicable = applicable;
    c.passed = !applicable || passed;
    c.detail = std::move(detail);
    if (!c.passed) {
      Counterexample ce;
      ce.witnesses = std::move(witnesses);
      c.counterexample = std::move(ce);
    }
    checks.push_back(std::move(c));
  }

  // Runs `pred` on each labeling and records the first one that fails.
  template <class Pred>
  void add_forall(std::string id, bool applicable, const std::vector<RomanLabeling>& labelings,
                  Pred pred, const std::string& what) {
    if (!applicable) {
      add(std::move(id), false, true);
      return;
    }
    for (const auto& f : labelings)
      if (!pred(f)) {
        add(std::move(id), true, false, what + " fails for " + to_string(f), to_string(f));
        return;
      }
    add(std::move(id), true, true);
  }

  std::vector<TheoremCheck> checks;
};

std::vector<TheoremCheck> run_checks(const WeightedGraph& g, const VerifyOptions& opts) {
  CheckList out;
  const std::size_t n = g.size();
  if (n == 0) return {};

  const SolveOptions& so = opts.solve;
  SolveResult optimum = enumerate_all_optima(g, so);
  std::vector<RomanLabeling> optima = *optimum.all_optima;
  if (opts.fault == Fault::understate_optimum) optima.push_back(RomanLabeling(n, 0));
  const Rational& gamma = optimum.value;
  const Rational& wg = g.total_weight();
  const bool nontrivial = is_nontrivial(g);

  // Reported optima are valid and all weigh exactly γ_wR.
  out.add_forall("witness_consistency", true, optima,
                 [&](const RomanLabeling& f) { return is_wrdf(g, f) && labeling_weight(g, f) == gamma; },
                 "valid wRDF of weight " + to_string(gamma));

  // Independent solvers agree.
  {
    std::string detail;
    bool ok = true;
    auto compare = [&](const char* name, const Rational& v) {
      if (v != gamma) {
        ok = false;
        detail += std::string(name) + " = " + to_string(v) + " ";
      }
    };
    compare("brute", gamma_wR_bruteforce(g, so).value);
    compare("diff", gamma_wR_via_differential(g, so).value);
    if (n <= 64) compare("bnb", gamma_wR_branch_and_bound(g, so).value);
    if (max_degree(g) <= 2) compare("dp", gamma_wR_dp(g).value);
    out.add("solver_agreement", true, ok, detail.empty() ? "" : "optimum " + to_string(gamma) + " vs " + detail);
  }

  // Sandwich and the edgeless characterization.
  const DominationResult dom = gamma_w_bruteforce(g, so.subset_guard);
  out.add("sandwich", true, dom.value <= gamma && gamma <= 2 * dom.value,
          "gamma_w = " + to_string(dom.value) + ", gamma_wR = " + to_string(gamma),
          set_string(dom.witness));
  out.add("empty_graph_characterization", true, (dom.value == gamma) == !nontrivial,
          "gamma_w = " + to_string(dom.value) + ", gamma_wR = " + to_string(gamma) +
              (nontrivial ? ", has edges" : ", edgeless"));
  out.add_forall("wrdf_support_dominates", true, optima,
                 [&](const RomanLabeling& f) {
                   auto v1 = f.level(1).members(), v2 = f.level(2).members();
                   v1.insert(v1.end(), v2.begin(), v2.end());
                   return is_dominating(g, VertexSet(v1));
                 },
                 "V1 ∪ V2 dominating");

  // Degree lower bound, including its normed specialization.
  if (nontrivial) {
    auto d = degree_lower_bound(g);
    bool ok = gamma >= d.raw && (!d.ceiled || gamma >= *d.ceiled);
    out.add("degree_lower_bound", true, ok,
            "bound " + to_string(d.raw) + (d.ceiled ? " (ceiled " + to_string(*d.ceiled) + ")" : "") +
                ", gamma_wR = " + to_string(gamma));
    if (is_normed(g)) {
      Rational normed = 2 * Rational(static_cast<unsigned long>(n)) / (max_weighted_degree(g) + 1);
      out.add("normed_degree_lower_bound", true, gamma >= normed,
              "bound " + to_string(normed) + ", gamma_wR = " + to_string(gamma));
    } else {
      out.add("normed_degree_lower_bound", false, true);
    }
  } else {
    out.add("degree_lower_bound", false, true);
    out.add("normed_degree_lower_bound", false, true);
  }

  // Any wRDF using a 2 weighs at least twice the lightest vertex.
  {
    const Rational floor2 = 2 * min_of(g.weights());
    out.add_forall("two_label_floor", true, optima,
                   [&](const RomanLabeling& f) { return f.count(2) == 0 || labeling_weight(g, f) >= floor2; },
                   "weight >= 2 min w");
  }

  // Structure of every optimal labeling.
  out.add_forall("optima_v1_edges_equal_weight", true, optima,
                 [&](const RomanLabeling& f) {
                   for (const auto& [u, v] : g.edges())
                     if (f[u] == 1 && f[v] == 1 && g.weight(u) != g.weight(v)) return false;
                   return true;
                 },
                 "adjacent V1 vertices have equal weight");
  out.add_forall("optima_no_v1_v2_edge", true, optima,
                 [&](const RomanLabeling& f) {
                   for (const auto& [u, v] : g.edges())
                     if ((f[u] == 1 && f[v] == 2) || (f[u] == 2 && f[v] == 1)) return false;
                   return true;
                 },
                 "no V1-V2 edge");
  {
    std::unordered_map<std::string, Rational> cache;
    out.add_forall("optima_v2_gamma_w_set", true, optima,
                   [&](const RomanLabeling& f) {
                     std::vector<Vertex> support;
                     for (Vertex v = 0; v < n; ++v)
                       if (f[v] != 1) support.push_back(v);
                     VertexSet s(support);
                     WeightedGraph h = induced_subgraph(g, s);
                     std::vector<Vertex> twos;
                     for (std::size_t i = 0; i < support.size(); ++i)
                       if (f[support[i]] == 2) twos.push_back(i);
                     VertexSet d(twos);
                     auto key = to_string(f);
                     auto it = cache.find(key);
                     if (it == cache.end()) it = cache.emplace(key, gamma_w_bruteforce(h, so.subset_guard).value).first;
                     return is_dominating(h, d) && weight_of(h, d) == it->second;
                   },
                   "V2 is a minimum-weight dominating set of G[V0 ∪ V2]");
  }

  // Existence claim: optima with fewest 1-labels have V1 independent.
  {
    std::size_t fewest = n + 1;
    for (const auto& f : optima) fewest = std::min(fewest, f.count(1));
    std::vector<RomanLabeling> min_v1;
    for (const auto& f : optima)
      if (f.count(1) == fewest) min_v1.push_back(f);
    SolveOptions tie = so;
    tie.tie_break_min_v1 = true;
    tie.enumerate_all_optima = false;
    min_v1.push_back(gamma_wR_bruteforce(g, tie).witness);
    out.add_forall("min_v1_optimum_independent", true, min_v1,
                   [&](const RomanLabeling& f) { return is_independent(g, f.level(1)); }, "V1 independent");
  }

  // Weight upper bound and its extremal characterization.
  {
    const bool applicable = n >= 2;
    const bool extremal = is_thp_extremal(g);
    out.add("weight_upper_bound", applicable, gamma <= wg,
            "gamma_wR = " + to_string(gamma) + ", w(G) = " + to_string(wg));
    out.add("weight_extremal_characterization", applicable, (gamma == wg) == extremal,
            "gamma_wR = " + to_string(gamma) + ", w(G) = " + to_string(wg) +
                (extremal ? ", structurally extremal" : ", not structurally extremal"));
  }

  // Structure of optima when γ_wR = w(G).
  out.add_forall("extremal_optima_structure", nontrivial && gamma == wg, optima,
                 [&](const RomanLabeling& f) {
                   for (Vertex u = 0; u < n; ++u) {
                     if (f[u] != 2) continue;
                     Rational zeros = 0;
                     for (Vertex v : g.neighbors(u)) {
                       if (f[v] == 2) return false;  // V2 independent
                       if (f[v] == 0) {
                         zeros += g.weight(v);
                         if (g.degree(u) != 1 || g.degree(v) != 1) return false;  // isolated edge
                       }
                     }
                     if (zeros != g.weight(u)) return false;
                   }
                   return true;
                 },
                 "w(u) = w(N(u) ∩ V0), V2 independent, V2-V0 edges are components");

  {
    auto ng = nordhaus_gaddum(g, so);
    out.add("nordhaus_gaddum", ng.applicable, ng.lower_ok && ng.upper_ok,
            ng.applicable ? to_string(ng.lower) + " <= " + to_string(ng.sum) + " < " + to_string(ng.upper)
                          : std::string());
  }

  {
    auto d = differential_of_graph(g, so.subset_guard);
    out.add("differential_duality", true, gamma == wg - d.value,
            "gamma_wR = " + to_string(gamma) + ", w(G) - diff(G) = " + to_string(wg - d.value),
            set_string(d.best_set));
  }

  return std::move(out.checks);
}

void write_failure(const VerifyOptions& opts, const WeightedGraph& g, const TheoremCheck& c) {
  if (!opts.failure_dir) return;
  std::filesystem::create_directories(*opts.failure_dir);
  DimacsDocument doc{{"theorem " + c.id, "trial " + std::to_string(c.trial)}, g};
  if (c.counterexample && c.counterexample->seed)
    doc.comments.push_back("seed " + std::to_string(*c.counterexample->seed));
  auto path = std::filesystem::path(*opts.failure_dir) /
              ("trial-" + std::to_string(c.trial) + "-" + c.id + ".wrd");
  write_dimacs_file(path.string(), doc);
}

void finish(VerificationReport& report, const WeightedGraph& g, std::vector<TheoremCheck> checks,
            const VerifyOptions& opts, std::size_t trial, std::optional<std::uint64_t> seed,
            const std::function<std::vector<TheoremCheck>(const WeightedGraph&)>& rerun) {
  for (auto& c : checks) {
    c.trial = trial;
    if (c.counterexample) {
      c.counterexample->graph = serialize_dimacs(g);
      c.counterexample->seed = seed;
      if (opts.shrink && rerun) {
        const std::string id = c.id;
        auto still_fails = [&](const WeightedGraph& h) {
          try {
            for (const auto& r : rerun(h))
              if (r.id == id && !r.passed) return true;
          } catch (const std::exception&) {
          }
          return false;
        };
        c.counterexample->shrunk_graph = serialize_dimacs(shrink_counterexample(g, still_fails));
      }
      ++report.failures;
      write_failure(opts, g, c);
    }
    report.checks.push_back(std::move(c));
  }
}

bool constant_weights(std::span<const Rational> w) {
  return std::all_of(w.begin(), w.end(), [&](const Rational& x) { return x == w.front(); });
}

}  // namespace

VerificationReport verify_graph(const WeightedGraph& g, const VerifyOptions& opts) {
  if (g.size() > opts.solve.labeling_guard)
    throw SizeGuardError(g.size(), opts.solve.labeling_guard, "verify_graph");
  VerificationReport report;
  report.trials = 1;
  auto rerun = [&](const WeightedGraph& h) { return run_checks(h, opts); };
  finish(report, g, run_checks(g, opts), opts, 0, std::nullopt, rerun);
  return report;
}

WeightedGraph corpus_graph(const CorpusParams& params, std::size_t index) {
  if (params.n_min < 1 || params.n_min > params.n_max || params.samplers.empty())
    throw GraphError(GraphError::Kind::invalid_parameter, "corpus needs 1 <= n_min <= n_max and a sampler");
  Rng rng(derive_seed(params.seed, index));
  const auto n = static_cast<std::size_t>(
      uniform_between(rng, static_cast<std::int64_t>(params.n_min), static_cast<std::int64_t>(params.n_max)));
  GenParams gp;
  gp.weights = params.samplers[index % params.samplers.size()];
  if (params.family == CorpusFamily::random) {
    gp.kind = GraphKind::random;
    gp.n = n;
    gp.p = params.edge_probability;
  } else {
    gp.kind = GraphKind::equal_matching;
    gp.s = static_cast<std::size_t>(uniform_between(rng, 0, static_cast<std::int64_t>(n / 2)));
    gp.t = n - 2 * gp.s;
  }
  return generate(gp, rng);
}

VerificationReport verify_corpus(const CorpusParams& params, const VerifyOptions& opts) {
  if (params.n_max > opts.solve.labeling_guard)
    throw SizeGuardError(params.n_max, opts.solve.labeling_guard, "verify_corpus");
  VerificationReport report;
  report.trials = params.trials;
  report.seed = params.seed;
  auto rerun = [&](const WeightedGraph& h) { return run_checks(h, opts); };
  for (std::size_t i = 0; i < params.trials; ++i) {
    WeightedGraph g = corpus_graph(params, i);
    auto checks = run_checks(g, opts);
    if (params.family == CorpusFamily::thp_extremal) {
      Rational gamma = gamma_wR_bruteforce(g, opts.solve).value;
      TheoremCheck c;
      c.id = "extremal_family_attains_weight";
      c.applicable = true;
      c.passed = is_thp_extremal(g) && gamma == g.total_weight();
      c.detail = "gamma_wR = " + to_string(gamma) + ", w(G) = " + to_string(g.total_weight());
      if (!c.passed) c.counterexample = Counterexample{};
      checks.push_back(std::move(c));
    }
    finish(report, g, std::move(checks), opts, i, derive_seed(params.seed, i), rerun);
  }
  return report;
}

VerificationReport verify_cycle_theorems(std::size_t n_min, std::size_t n_max, std::size_t trials,
                                         std::uint64_t seed, const VerifyOptions& opts) {
  if (n_min < 3 || n_min > n_max)
    throw GraphError(GraphError::Kind::invalid_parameter, "cycle range needs 3 <= n_min <= n_max");
  if (n_max > opts.solve.labeling_guard)
    throw SizeGuardError(n_max, opts.solve.labeling_guard, "verify_cycle_theorems");

  VerificationReport report;
  report.seed = seed;
  std::size_t trial = 0;

  auto check_cycle = [&](const std::vector<Rational>& w, const std::string& label,
                         std::optional<std::uint64_t> trial_seed, bool expect_equality_witness) {
    const std::size_t n = w.size();
    GenParams gp;
    gp.kind = GraphKind::cycle;
    gp.n = n;
    WeightedGraph shape = generate(gp, 0);
    WeightedGraph g = build_graph(n, shape.edges(), w);

    CheckList out;
    const Rational gamma = gamma_wR_bruteforce(g, opts.solve).value;
    const CycleBound bound = cycle_upper_bound(w);
    const bool constant = constant_weights(w);
    const std::string ctx = label + ": gamma_wR = " + to_string(gamma) + ", bound = " + to_string(bound.formula);

    out.add("cycle_upper_bound", true, gamma <= bound.formula, ctx);
    out.add("cycle_constructive_bound", true, gamma <= bound.constructive && bound.constructive <= bound.formula,
            label + ": constructive " + to_string(bound.constructive));
    {
      auto cons = cycle_constructions(w);
      Rational total = 0;
      bool ok = true;
      std::string bad;
      for (const auto& c : cons) {
        total += c.weight;
        if (!is_wrdf(g, c.labeling) || labeling_weight(g, c.labeling) != c.weight) {
          ok = false;
          bad = to_string(c.labeling);
        }
      }
      auto coeff = static_cast<unsigned long>(cycle_construction_coefficient(n));
      ok = ok && total == coeff * g.total_weight();
      out.add("cycle_constructions", true, ok, label + ": sum f_m(V) = " + to_string(total), bad);
    }
    if (n % 3 != 0) {
      out.add("cycle_equality_characterization", true, (gamma == bound.formula) == constant,
              ctx + (constant ? ", constant" : ", non-constant"));
    } else {
      out.add("cycle_equality_characterization", constant, gamma == bound.formula, ctx + ", constant");
    }
    out.add("cycle_constant_value", constant, constant && gamma == gamma_wR_equal_cycle(n, w.front()), ctx);
    {
      Rational dp = gamma_wR_dp(g).value;
      out.add("dp_matches_bruteforce", true, dp == gamma, label + ": dp = " + to_string(dp));
    }
    if (expect_equality_witness)
      out.add("cycle_3k_nonconstant_equality", true, gamma == bound.formula && !constant, ctx);

    auto rerun = std::function<std::vector<TheoremCheck>(const WeightedGraph&)>{};
    finish(report, g, std::move(out.checks), opts, trial++, trial_seed, rerun);
  };

  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = derive_seed(seed, n * 1000003 + t);
      Rng rng(s);
      const Rational p(static_cast<long>(uniform_between(rng, 1, 9)));
      std::vector<Rational> constant(n, p);
      check_cycle(constant, "C" + std::to_string(n) + " constant", s, false);

      std::vector<Rational> perturbed = constant;
      perturbed[uniform_below(rng, n)] += Rational(static_cast<long>(uniform_between(rng, 1, 5)));
      check_cycle(perturbed, "C" + std::to_string(n) + " perturbed", s, false);

      std::vector<Rational> random(n);
      for (auto& x : random) x = Rational(static_cast<long>(uniform_between(rng, 1, 9)));
      check_cycle(random, "C" + std::to_string(n) + " random", s, false);
    }
  }
  if (n_min <= 6 && 6 <= n_max) {
    std::vector<Rational> hexagon{1, 2, 3, 3, 2, 1};
    check_cycle(hexagon, "C6 (1,2,3,3,2,1)", std::nullopt, true);
  }
  report.trials = trial;
  return report;
}

WeightedGraph shrink_counterexample(const WeightedGraph& g,
                                    const std::function<bool(const WeightedGraph&)>& still_fails) {
  WeightedGraph cur = g;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; cur.size() > 1 && v < cur.size(); ++v) {
      std::vector<Vertex> keep;
      for (Vertex u = 0; u < cur.size(); ++u)
        if (u != v) keep.push_back(u);
      WeightedGraph h = induced_subgraph(cur, VertexSet(keep));
      if (still_fails(h)) {
        cur = std::move(h);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    auto edges = cur.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto fewer = edges;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      WeightedGraph h = build_graph(cur.size(), fewer, cur.weights());
      if (still_fails(h)) {
        cur = std::move(h);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(36) << "theorem" << std::right << std::setw(12) << "applicable"
      << std::setw(10) << "passed" << std::setw(10) << "failed" << "\n";
  for (const auto& [id, t] : report.tally())
    out << std::left << std::setw(36) << id << std::right << std::setw(12) << t.applicable << std::setw(10)
        << t.passed << std::setw(10) << t.failed << "\n";
  out << "trials: " << report.trials;
  if (report.seed) out << "  seed: " << *report.seed;
  out << "  failures: " << report.failures << "\n";
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    out << "\nFAIL " << c.id << " (trial " << c.trial << ")";
    if (c.counterexample && c.counterexample->seed) out << " seed " << *c.counterexample->seed;
    out << "\n  " << c.detail << "\n";
    if (c.counterexample) {
      if (!c.counterexample->witnesses.empty()) out << "  witnesses: " << c.counterexample->witnesses << "\n";
      out << c.counterexample->graph;
      if (!c.counterexample->shrunk_graph.empty()) out << "  shrunk:\n" << c.counterexample->shrunk_graph;
    }
  }
  return out.str();
}

std::string report_to_json(const VerificationReport& report) {
  using nlohmann::json;
  json doc;
  doc["trials"] = report.trials;
  doc["seed"] = report.seed ? json(std::to_string(*report.seed)) : json(nullptr);
  doc["failures"] = report.failures;
  doc["passed"] = report.passed();
  json records = json::array();
  for (const auto& c : report.checks) {
    json r{{"trial", c.trial}, {"theorem", c.id}, {"applicable", c.applicable}, {"passed", c.passed},
           {"detail", c.detail}};
    if (c.counterexample) {
      r["counterexample"] = {{"graph", c.counterexample->graph},
                             {"shrunk_graph", c.counterexample->shrunk_graph},
                             {"witnesses", c.counterexample->witnesses},
                             {"seed", c.counterexample->seed ? json(std::to_string(*c.counterexample->seed))
                                                             : json(nullptr)}};
    }
    records.push_back(std::move(r));
  }
  doc["records"] = std::move(records);
  return doc.dump(2);
}

}  // namespace wrd
