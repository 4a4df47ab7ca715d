#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrd/bounds.hpp"
#include "wrd/differential.hpp"
#include "wrd/dimacs.hpp"
#include "wrd/errors.hpp"
#include "wrd/families.hpp"
#include "wrd/generate.hpp"
#include "wrd/solvers.hpp"
#include "wrd/verify.hpp"

namespace wrd::cli {

namespace {

using nlohmann::json;

// Bad user-supplied values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable input file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json labels_json(const RomanLabeling& f) {
  json a = json::array();
  for (auto l : f.labels()) a.push_back(static_cast<int>(l));
  return a;
}

json set_json(const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v + 1);
  return out + "}";
}

json opt_json(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

json guards_json(const SolveOptions& o) {
  return {{"labeling", o.labeling_guard}, {"subset", o.subset_guard}};
}

WeightedGraph load(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw InputError("cannot open '" + path + "'");
  return read_dimacs_file(path).graph;
}

std::vector<Rational> rational_list(const std::string& text, const char* flag) {
  try {
    return parse_rational_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Shared solver flags.
struct SolverFlags {
  std::size_t labeling_guard = SolveOptions{}.labeling_guard;
  std::size_t subset_guard = SolveOptions{}.subset_guard;

  void attach(CLI::App* app) {
    app->add_option("--guard", labeling_guard, "Max n for 3^n exhaustive search")->capture_default_str();
    app->add_option("--subset-guard", subset_guard, "Max n for 2^n subset enumeration")->capture_default_str();
  }
  SolveOptions options() const {
    SolveOptions o;
    o.labeling_guard = labeling_guard;
    o.subset_guard = subset_guard;
    return o;
  }
};

// ---------------------------------------------------------------- solve

struct SolveCmd {
  std::string file;
  std::string method = "brute";
  bool all_optima = false;
  bool min_v1 = false;
  bool as_json = false;
  SolverFlags flags;

  int operator()(std::ostream& out) const {
    const WeightedGraph g = load(file);
    SolveOptions o = flags.options();
    try {
      o.method = parse_method(method);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    o.enumerate_all_optima = all_optima;
    o.tie_break_min_v1 = min_v1;
    const SolveResult r = solve(g, o);

    if (as_json) {
      json doc{{"value", to_string(r.value)},
               {"witness", labels_json(r.witness)},
               {"method", to_string(r.method)},
               {"guards", guards_json(o)}};
      if (r.all_optima) {
        json a = json::array();
        for (const auto& f : *r.all_optima) a.push_back(labels_json(f));
        doc["all_optima"] = std::move(a);
      }
      out << doc.dump(2) << "\n";
      return ok;
    }
    out << "gamma_wR = " << to_string(r.value) << "\n";
    out << "witness = " << to_string(r.witness) << "\n";
    out << "method = " << to_string(r.method) << "\n";
    if (r.all_optima) {
      out << "optima = " << r.all_optima->size() << "\n";
      for (const auto& f : *r.all_optima) out << "  " << to_string(f) << "\n";
    }
    return ok;
  }
};

// ---------------------------------------------------------------- bounds

struct BoundsCmd {
  std::string file;
  bool as_json = false;
  SolverFlags flags;

  int operator()(std::ostream& out) const {
    const WeightedGraph g = load(file);
    const SolveOptions o = flags.options();
    const BoundsReport r = bounds_report(g, o);

    if (as_json) {
      json doc{{"n", g.size()},
               {"m", g.edge_count()},
               {"total_weight", to_string(g.total_weight())},
               {"gamma_w", opt_json(r.gamma_w)},
               {"value", opt_json(r.gamma_wR)},
               {"degree_lower_bound", opt_json(r.degree_lower_bound)},
               {"ceiled_degree_lower_bound", opt_json(r.ceiled_degree_lower_bound)},
               {"weight_upper_bound", to_string(r.weight_upper_bound)},
               {"normed", r.normed},
               {"thp_extremal", r.thp_extremal},
               {"checks",
                {{"sandwich", r.sandwich_ok},
                 {"empty_characterization", r.empty_characterization_ok},
                 {"degree", r.degree_ok},
                 {"weight", r.weight_ok},
                 {"extremal", r.extremal_ok}}},
               {"method", to_string(o.method)},
               {"guards", guards_json(o)}};
      if (r.nordhaus_gaddum && r.nordhaus_gaddum->applicable) {
        const auto& ng = *r.nordhaus_gaddum;
        doc["nordhaus_gaddum"] = {{"lower", to_string(ng.lower)},
                                  {"sum", to_string(ng.sum)},
                                  {"upper", to_string(ng.upper)},
                                  {"ok", ng.ok()}};
      } else {
        doc["nordhaus_gaddum"] = nullptr;
      }
      out << doc.dump(2) << "\n";
      return ok;
    }

    auto value = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string("n/a"); };
    out << "n = " << g.size() << ", m = " << g.edge_count() << ", w(G) = " << to_string(g.total_weight()) << "\n";
    out << "gamma_w = " << value(r.gamma_w) << "\n";
    out << "gamma_wR = " << value(r.gamma_wR) << "\n";
    out << "degree lower bound = " << value(r.degree_lower_bound);
    if (r.ceiled_degree_lower_bound) out << " (ceiled " << to_string(*r.ceiled_degree_lower_bound) << ")";
    out << "\n";
    out << "weight upper bound = " << to_string(r.weight_upper_bound) << "\n";
    out << "normed = " << yes_no(r.normed) << "\n";
    out << "extremal structure = " << yes_no(r.thp_extremal) << "\n";
    if (r.nordhaus_gaddum && r.nordhaus_gaddum->applicable) {
      const auto& ng = *r.nordhaus_gaddum;
      out << "nordhaus-gaddum: " << to_string(ng.lower) << " <= " << to_string(ng.sum) << " < "
          << to_string(ng.upper) << "\n";
    } else {
      out << "nordhaus-gaddum: n/a\n";
    }
    out << "all bounds hold\n";
    return ok;
  }
};

// ---------------------------------------------------------------- diff

struct DiffCmd {
  std::string file;
  bool as_json = false;
  SolverFlags flags;

  int operator()(std::ostream& out, std::ostream& err) const {
    const WeightedGraph g = load(file);
    const SolveOptions o = flags.options();
    const DifferentialResult d = differential_of_graph(g, o.subset_guard);
    SolveOptions exact = o;
    exact.method = g.size() <= o.labeling_guard ? Method::brute : Method::bnb;
    const Rational gamma = solve(g, exact).value;
    const Rational dual = g.total_weight() - d.value;
    const bool agrees = dual == gamma;

    if (as_json) {
      json doc{{"value", to_string(d.value)},
               {"best_set", set_json(d.best_set)},
               {"boundary", set_json(d.boundary)},
               {"total_weight", to_string(g.total_weight())},
               {"dual", to_string(dual)},
               {"gamma_wR", to_string(gamma)},
               {"duality_holds", agrees},
               {"method", to_string(exact.method)},
               {"guards", guards_json(o)}};
      out << doc.dump(2) << "\n";
    } else {
      out << "∂(G) = " << to_string(d.value) << ", S* = " << set_text(d.best_set) << ", w(G) − ∂(G) = "
          << to_string(dual) << (agrees ? " = γ_wR ✓" : " ≠ γ_wR = " + to_string(gamma) + " ✗") << "\n";
    }
    if (!agrees) {
      err << "duality violated\n" << serialize_dimacs(g);
      return theorem_violation;
    }
    return ok;
  }
};

// ---------------------------------------------------------------- family

struct FamilyCmd {
  std::string kind;
  std::string weights;
  std::string x;
  std::string y;
  bool as_json = false;
  SolverFlags flags;

  int operator()(std::ostream& out, std::ostream& err) const {
    const SolveOptions o = flags.options();
    FamilyResult r;
    WeightedGraph g;
    json extra = json::object();
    std::vector<std::string> notes;

    auto need = [](const std::string& s, const char* flag) {
      if (s.empty()) throw UsageError(std::string(flag) + " is required");
    };

    if (kind == "complete") {
      need(weights, "--weights");
      auto w = rational_list(weights, "--weights");
      r = gamma_wR_complete(w);
      std::vector<Edge> e;
      for (Vertex u = 0; u < w.size(); ++u)
        for (Vertex v = u + 1; v < w.size(); ++v) e.emplace_back(u, v);
      g = build_graph(w.size(), e, w);
    } else if (kind == "bipartite" || kind == "star") {
      std::vector<Rational> xs, ys;
      if (kind == "star") {
        need(weights, "--weights");
        auto w = rational_list(weights, "--weights");
        if (w.size() < 2) throw UsageError("--weights: star needs a center and at least one leaf");
        xs.assign(w.begin(), w.begin() + 1);
        ys.assign(w.begin() + 1, w.end());
        r = gamma_wR_star(xs.front(), ys);
      } else {
        need(x, "--x");
        need(y, "--y");
        xs = rational_list(x, "--x");
        ys = rational_list(y, "--y");
        r = gamma_wR_complete_bipartite(xs, ys);
      }
      std::vector<Rational> w = xs;
      w.insert(w.end(), ys.begin(), ys.end());
      std::vector<Edge> e;
      for (Vertex u = 0; u < xs.size(); ++u)
        for (Vertex v = xs.size(); v < w.size(); ++v) e.emplace_back(u, v);
      g = build_graph(w.size(), e, w);
    } else if (kind == "cycle") {
      need(weights, "--weights");
      auto w = rational_list(weights, "--weights");
      const CycleBound b = cycle_upper_bound(w);
      std::vector<Edge> e;
      for (Vertex u = 0; u + 1 < w.size(); ++u) e.emplace_back(u, u + 1);
      e.emplace_back(0, w.size() - 1);
      g = build_graph(w.size(), e, w);
      const SolveResult exact = gamma_wR_dp(g);
      r = {exact.value, exact.witness};
      const bool equal = exact.value == b.formula;
      extra = {{"bound", to_string(b.formula)},
               {"constructive_bound", to_string(b.constructive)},
               {"best_construction", {{"start", b.best_construction.start},
                                      {"labeling", labels_json(b.best_construction.labeling)}}},
               {"attains_bound", equal}};
      notes.push_back("bound = " + to_string(b.formula));
      notes.push_back("best construction = f_" + std::to_string(b.best_construction.start) + " (" +
                      to_string(b.best_construction.labeling) + "), weight " + to_string(b.constructive));
      notes.push_back(std::string("attains bound = ") + yes_no(equal));
    } else {
      throw UsageError("unknown family '" + kind + "' (expected complete, bipartite, cycle or star)");
    }

    std::optional<Rational> brute;
    if (g.size() <= o.labeling_guard) brute = gamma_wR_bruteforce(g, o).value;
    const bool agrees = !brute || *brute == r.value;

    if (as_json) {
      json doc{{"family", kind},
               {"value", to_string(r.value)},
               {"witness", labels_json(r.witness)},
               {"cross_check", brute ? json(agrees) : json(nullptr)},
               {"brute_force", opt_json(brute)},
               {"method", kind == "cycle" ? "dp" : "formula"},
               {"guards", guards_json(o)}};
      doc.update(extra);
      out << doc.dump(2) << "\n";
    } else {
      out << "gamma_wR = " << to_string(r.value) << "\n";
      out << "witness = " << to_string(r.witness) << "\n";
      for (const auto& line : notes) out << line << "\n";
      if (!brute)
        out << "cross-check = skipped (n = " << g.size() << " exceeds guard " << o.labeling_guard << ")\n";
      else
        out << "cross-check = " << (agrees ? "agrees" : "DISAGREES: brute force " + to_string(*brute)) << "\n";
    }
    if (!agrees) {
      err << "closed form disagrees with brute force\n" << serialize_dimacs(g);
      return theorem_violation;
    }
    return ok;
  }
};

// ---------------------------------------------------------------- verify

// "n=3..9,p=1/2,trials=200,seed=42,weights=int:1:9|grid:3:1/3:3"
CorpusParams parse_corpus_flags(const std::string& text) {
  CorpusParams p;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--random: expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
      if (key == "n") {
        if (auto dots = value.find(".."); dots != std::string::npos) {
          p.n_min = std::stoul(value.substr(0, dots));
          p.n_max = std::stoul(value.substr(dots + 2));
        } else {
          p.n_min = p.n_max = std::stoul(value);
        }
      } else if (key == "p") {
        p.edge_probability = parse_rational(value);
      } else if (key == "trials") {
        p.trials = std::stoul(value);
      } else if (key == "seed") {
        p.seed = std::stoull(value);
      } else if (key == "weights") {
        p.samplers.clear();
        std::stringstream ws(value);
        std::string s;
        while (std::getline(ws, s, '|')) p.samplers.push_back(parse_sampler(s));
      } else {
        throw UsageError("--random: unknown key '" + key + "'");
      }
    }
  } catch (const std::logic_error& e) {  // stoul failures and bad samplers
    throw UsageError(std::string("--random: ") + e.what());
  }
  if (p.n_min < 1 || p.n_min > p.n_max) throw UsageError("--random: need 1 <= n_min <= n_max");
  if (p.samplers.empty()) throw UsageError("--random: weights list is empty");
  if (p.edge_probability < 0 || p.edge_probability > 1) throw UsageError("--random: p must lie in [0, 1]");
  return p;
}

struct VerifyCmd {
  std::string file;
  std::string random;
  std::string family;
  std::string cycles;
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  std::string out_dir;
  bool inject_fault = false;
  bool no_shrink = false;
  bool as_json = false;
  SolverFlags flags;

  int operator()(std::ostream& out, std::ostream& err) const {
    VerifyOptions vo;
    vo.solve = flags.options();
    vo.shrink = !no_shrink;
    vo.fault = inject_fault ? Fault::understate_optimum : Fault::none;
    if (!out_dir.empty()) vo.failure_dir = out_dir;

    const int modes = !file.empty() + !random.empty() + !cycles.empty() + (!family.empty() && random.empty());
    if (modes != 1) throw UsageError("verify takes exactly one of <file>, --random, --family or --cycles");

    VerificationReport report;
    if (!file.empty()) {
      report = verify_graph(load(file), vo);
    } else if (!cycles.empty()) {
      std::size_t lo = 0, hi = 0;
      try {
        auto dots = cycles.find("..");
        lo = std::stoul(cycles.substr(0, dots));
        hi = dots == std::string::npos ? lo : std::stoul(cycles.substr(dots + 2));
      } catch (const std::logic_error&) {
        throw UsageError("--cycles: expected N or LO..HI");
      }
      if (lo < 3 || lo > hi) throw UsageError("--cycles: need 3 <= LO <= HI");
      report = verify_cycle_theorems(lo, hi, trials, seed, vo);
    } else {
      CorpusParams p;
      if (!random.empty()) {
        p = parse_corpus_flags(random);
      } else {
        p.trials = trials;
        p.seed = seed;
      }
      if (!family.empty()) {
        if (family == "thp") p.family = CorpusFamily::thp_extremal;
        else if (family == "random") p.family = CorpusFamily::random;
        else throw UsageError("--family: expected thp or random");
      }
      report = verify_corpus(p, vo);
    }

    out << (as_json ? report_to_json(report) + "\n" : format_report(report));
    if (!report.passed()) {
      err << report.failures << " theorem check(s) failed\n";
      return theorem_violation;
    }
    return ok;
  }
};

// ---------------------------------------------------------------- gen

struct GenCmd {
  std::string kind = "random";
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  std::string p = "1/2";
  std::string weights = "const:1";
  std::uint64_t seed = 0;
  std::string output;
  bool as_json = false;

  int operator()(std::ostream& out) const {
    GenParams gp;
    try {
      gp.kind = parse_graph_kind(kind);
      gp.p = parse_rational(p);
      gp.weights = parse_sampler(weights);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    gp.n = n;
    gp.s = s;
    gp.t = t;
    DimacsDocument doc;
    doc.graph = generate(gp, seed);
    doc.comments.push_back("kind " + kind + " n " + std::to_string(n) + " s " + std::to_string(s) + " t " +
                           std::to_string(t) + " p " + to_string(gp.p) + " weights " + to_string(gp.weights) +
                           " seed " + std::to_string(seed));
    const std::string text = serialize_dimacs(doc);
    if (!output.empty()) {
      std::ofstream f(output, std::ios::binary);
      if (!f) throw InputError("cannot write '" + output + "'");
      f << text;
    }
    if (as_json) {
      out << json{{"n", doc.graph.size()}, {"m", doc.graph.edge_count()}, {"seed", std::to_string(seed)},
                  {"output", output.empty() ? json(nullptr) : json(output)}, {"dimacs", text}}
                 .dump(2)
          << "\n";
    } else if (output.empty()) {
      out << text;
    }
    return ok;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weighted Roman domination toolkit", "wrd"};
  app.require_subcommand(1);

  SolveCmd solve_cmd;
  auto* solve = app.add_subcommand("solve", "Exact gamma_wR of a weighted-DIMACS graph");
  solve->add_option("file", solve_cmd.file, "Input graph")->required();
  solve->add_option("--method", solve_cmd.method, "brute, bnb, dp or diff")->capture_default_str();
  solve->add_flag("--all-optima", solve_cmd.all_optima, "List every optimal labeling");
  solve->add_flag("--min-v1", solve_cmd.min_v1, "Prefer optima with fewest 1-labels");
  solve->add_flag("--json", solve_cmd.as_json);
  solve_cmd.flags.attach(solve);

  BoundsCmd bounds_cmd;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound against exact values");
  bounds->add_option("file", bounds_cmd.file, "Input graph")->required();
  bounds->add_flag("--json", bounds_cmd.as_json);
  bounds_cmd.flags.attach(bounds);

  DiffCmd diff_cmd;
  auto* diff = app.add_subcommand("diff", "Differential of the graph and the duality check");
  diff->add_option("file", diff_cmd.file, "Input graph")->required();
  diff->add_flag("--json", diff_cmd.as_json);
  diff_cmd.flags.attach(diff);

  FamilyCmd family_cmd;
  auto* family = app.add_subcommand("family", "Closed-form value for a graph family");
  family->add_option("kind", family_cmd.kind, "complete, bipartite, cycle or star")->required();
  family->add_option("--weights", family_cmd.weights, "Comma-separated weights (star: center first)");
  family->add_option("--x", family_cmd.x, "Weights of class X (bipartite)");
  family->add_option("--y", family_cmd.y, "Weights of class Y (bipartite)");
  family->add_flag("--json", family_cmd.as_json);
  family_cmd.flags.attach(family);

  VerifyCmd verify_cmd;
  auto* verify = app.add_subcommand("verify", "Check every theorem on a graph or a seeded corpus");
  verify->add_option("file", verify_cmd.file, "Input graph");
  verify->add_option("--random", verify_cmd.random, "Corpus parameters, e.g. n=3..9,p=1/2,trials=200,seed=42");
  verify->add_option("--family", verify_cmd.family, "Corpus family: random or thp");
  verify->add_option("--cycles", verify_cmd.cycles, "Cycle range LO..HI");
  verify->add_option("--trials", verify_cmd.trials, "Trials for --family and --cycles")->capture_default_str();
  verify->add_option("--seed", verify_cmd.seed, "Seed for --family and --cycles")->capture_default_str();
  verify->add_option("--out-dir", verify_cmd.out_dir, "Write failing graphs here");
  verify->add_flag("--inject-fault", verify_cmd.inject_fault, "Self-test: corrupt the reported optima");
  verify->add_flag("--no-shrink", verify_cmd.no_shrink, "Skip counterexample shrinking");
  verify->add_flag("--json", verify_cmd.as_json);
  verify_cmd.flags.attach(verify);

  GenCmd gen_cmd;
  auto* gen = app.add_subcommand("gen", "Generate a weighted-DIMACS graph");
  gen->add_option("--kind", gen_cmd.kind, "path, cycle, complete, complete_bipartite, star, empty, random, "
                                          "equal_matching")
      ->capture_default_str();
  gen->add_option("--n", gen_cmd.n, "Vertex count");
  gen->add_option("--s", gen_cmd.s, "First class size or matching edges");
  gen->add_option("--t", gen_cmd.t, "Second class size, star leaves or isolated vertices");
  gen->add_option("--p", gen_cmd.p, "Edge probability")->capture_default_str();
  gen->add_option("--weights", gen_cmd.weights, "const:Q, int:LO:HI or grid:DEN:LO:HI")->capture_default_str();
  gen->add_option("--seed", gen_cmd.seed)->capture_default_str();
  gen->add_option("-o,--output", gen_cmd.output, "Output file (default stdout)");
  gen->add_flag("--json", gen_cmd.as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (solve->parsed()) return solve_cmd(out);
    if (bounds->parsed()) return bounds_cmd(out);
    if (diff->parsed()) return diff_cmd(out, err);
    if (family->parsed()) return family_cmd(out, err);
    if (verify->parsed()) return verify_cmd(out, err);
    if (gen->parsed()) return gen_cmd(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return size_guard;
  } catch (const std::overflow_error& e) {
    err << "size guard: " << e.what() << "\n";
    return size_guard;
  } catch (const TheoremViolation& e) {
    err << e.what() << "\n" << e.dump();
    return theorem_violation;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace wrd::cli
