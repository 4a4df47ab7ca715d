// Acceptance campaign: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wrd/bounds.hpp"
#include "wrd/differential.hpp"
#include "wrd/dimacs.hpp"
#include "wrd/families.hpp"
#include "wrd/generate.hpp"
#include "wrd/solvers.hpp"
#include "wrd/verify.hpp"

using namespace wrd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure descriptions of one criterion.
struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(describe());
  }
};

const std::vector<WeightSampler> mixed_samplers{
    IntegerUniform{1, 9},
    RationalGrid{3, Rational(1, 3), Rational(3)},
    RationalGrid{7, Rational(1, 7), Rational(5, 2)},
    ConstantWeight{Rational(1)},
};

std::vector<Rational> draw(Rng& rng, std::size_t n, const WeightSampler& s) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_weight(rng, s));
  return out;
}

WeightedGraph random_graph(Rng& rng, std::size_t n_min, std::size_t n_max, std::size_t index) {
  GenParams p;
  p.kind = GraphKind::random;
  p.n = static_cast<std::size_t>(
      uniform_between(rng, static_cast<std::int64_t>(n_min), static_cast<std::int64_t>(n_max)));
  p.p = Rational(uniform_between(rng, 1, 4), 5);
  p.weights = mixed_samplers[index % mixed_samplers.size()];
  return generate(p, rng);
}

WeightedGraph complete_graph(const std::vector<Rational>& w) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < w.size(); ++u)
    for (Vertex v = u + 1; v < w.size(); ++v) e.emplace_back(u, v);
  return build_graph(w.size(), e, w);
}

WeightedGraph bipartite_graph(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  std::vector<Rational> w = xs;
  w.insert(w.end(), ys.begin(), ys.end());
  std::vector<Edge> e;
  for (Vertex u = 0; u < xs.size(); ++u)
    for (Vertex v = xs.size(); v < w.size(); ++v) e.emplace_back(u, v);
  return build_graph(w.size(), e, w);
}

std::string dump(const WeightedGraph& g) {
  std::string s = serialize_dimacs(g);
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

// Shared corpus for criteria 1, 4, 5 and 6.
std::vector<WeightedGraph> duality_corpus() {
  std::vector<WeightedGraph> out;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng(derive_seed(1001, i));
    out.push_back(random_graph(rng, 1, 10, i));
  }
  return out;
}

struct Corpus {
  std::vector<WeightedGraph> graphs;
  std::vector<Rational> gamma;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus c;
    c.graphs = duality_corpus();
    for (const auto& g : c.graphs) c.gamma.push_back(gamma_wR_bruteforce(g).value);
    return c;
  }();
  return c;
}

Outcome criterion_duality() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const auto& g = c.graphs[i];
    const Rational dual = g.total_weight() - differential_of_graph(g).value;
    o.expect(dual == c.gamma[i], [&] {
      return "w - diff = " + to_string(dual) + " but brute = " + to_string(c.gamma[i]) + " on " + dump(g);
    });
  }
  return o;
}

Outcome criterion_complete() {
  Outcome o;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(2002, i));
    const auto n = static_cast<std::size_t>(uniform_between(rng, 2, 8));
    auto w = draw(rng, n, mixed_samplers[i % 3]);
    auto g = complete_graph(w);
    auto f = gamma_wR_complete(w);
    auto b = gamma_wR_bruteforce(g).value;
    o.expect(f.value == b && f.value == 2 * min_of(w) && is_wrdf(g, f.witness),
             [&] { return "formula " + to_string(f.value) + " vs brute " + to_string(b) + " on " + dump(g); });
  }
  return o;
}

Outcome criterion_bipartite() {
  Outcome o;
  std::size_t star_cases = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(3003, i));
    std::size_t s, t;
    if (i < 8) {  // every s = 1 shape K_{1,t}, t = 1..8
      s = 1;
      t = i + 1;
    } else {
      s = static_cast<std::size_t>(uniform_between(rng, 1, 8));
      t = static_cast<std::size_t>(uniform_between(rng, 1, static_cast<std::int64_t>(9 - s)));
    }
    if (s == 1 || t == 1) ++star_cases;
    auto xs = draw(rng, s, mixed_samplers[i % 3]);
    auto ys = draw(rng, t, mixed_samplers[(i + 1) % 3]);
    auto g = bipartite_graph(xs, ys);
    auto f = gamma_wR_complete_bipartite(xs, ys);
    auto b = gamma_wR_bruteforce(g).value;
    o.expect(f.value == b && is_wrdf(g, f.witness) && labeling_weight(g, f.witness) == f.value,
             [&] { return "formula " + to_string(f.value) + " vs brute " + to_string(b) + " on " + dump(g); });
  }
  o.expect(star_cases >= 8, [&] { return "only " + std::to_string(star_cases) + " star cases"; });
  return o;
}

Outcome criterion_sandwich() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const auto& g = c.graphs[i];
    const Rational gw = gamma_w_bruteforce(g).value;
    const Rational& gr = c.gamma[i];
    o.expect(gw <= gr && gr <= 2 * gw && ((gw == gr) == !is_nontrivial(g)), [&] {
      return "gamma_w " + to_string(gw) + ", gamma_wR " + to_string(gr) + " on " + dump(g);
    });
  }
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(derive_seed(4004, i));
    const auto n = static_cast<std::size_t>(uniform_between(rng, 1, 10));
    auto g = build_graph(n, std::vector<Edge>{}, draw(rng, n, mixed_samplers[i % 3]));
    auto gw = gamma_w_bruteforce(g).value, gr = gamma_wR_bruteforce(g).value;
    o.expect(gw == gr && gr == g.total_weight(), [&] { return "edgeless mismatch on " + dump(g); });
  }
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(derive_seed(4005, i));
    const auto n = static_cast<std::size_t>(uniform_between(rng, 2, 10));
    const auto u = static_cast<Vertex>(uniform_below(rng, n));
    auto v = static_cast<Vertex>(uniform_below(rng, n - 1));
    if (v >= u) ++v;
    auto g = build_graph(n, std::vector<Edge>{{std::min(u, v), std::max(u, v)}}, draw(rng, n, mixed_samplers[i % 3]));
    auto gw = gamma_w_bruteforce(g).value, gr = gamma_wR_bruteforce(g).value;
    o.expect(gw < gr, [&] { return "single edge: gamma_w " + to_string(gw) + " not < " + to_string(gr); });
  }
  return o;
}

Outcome criterion_degree() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const auto& g = c.graphs[i];
    if (!is_nontrivial(g)) continue;
    auto d = degree_lower_bound(g);
    o.expect(d.raw <= c.gamma[i] && (!d.ceiled || *d.ceiled <= c.gamma[i]), [&] {
      return "bound " + to_string(d.raw) + " > " + to_string(c.gamma[i]) + " on " + dump(g);
    });
  }
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(derive_seed(5005, i));
    const auto n = static_cast<std::size_t>(uniform_between(rng, 2, 8));
    auto g = complete_graph(draw(rng, n, mixed_samplers[i % 3]));
    auto d = degree_lower_bound(g).raw;
    auto b = gamma_wR_bruteforce(g).value;
    o.expect(d == b, [&] { return "complete graph not tight: " + to_string(d) + " vs " + to_string(b); });
  }
  return o;
}

Outcome criterion_weight() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const auto& g = c.graphs[i];
    if (g.size() < 2) continue;
    o.expect(c.gamma[i] <= weight_upper_bound(g), [&] { return "gamma_wR > w(G) on " + dump(g); });
    o.expect((c.gamma[i] == g.total_weight()) == is_thp_extremal(g),
             [&] { return "extremal characterization fails on " + dump(g); });
  }

  CorpusParams thp;
  thp.family = CorpusFamily::thp_extremal;
  thp.n_min = 2;
  thp.n_max = 10;
  thp.samplers = {mixed_samplers.begin(), mixed_samplers.end() - 1};
  thp.seed = 6006;
  for (std::size_t i = 0; i < 50; ++i) {
    auto g = corpus_graph(thp, i);
    auto b = gamma_wR_bruteforce(g).value;
    o.expect(is_thp_extremal(g) && b == g.total_weight(), [&] { return "not extremal: " + dump(g); });
  }

  // Perturbations: unequal endpoint weights on one edge, or a P3 component.
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(derive_seed(6007, i));
    GenParams p;
    p.kind = GraphKind::equal_matching;
    p.s = static_cast<std::size_t>(uniform_between(rng, 1, 3));
    p.t = static_cast<std::size_t>(uniform_between(rng, 0, 2));
    p.weights = mixed_samplers[i % 3];
    auto base = generate(p, rng);
    WeightedGraph g;
    if (i % 2 == 0) {
      std::vector<Rational> w(base.weights().begin(), base.weights().end());
      w[1] += sample_weight(rng, mixed_samplers[i % 3]);
      g = build_graph(base.size(), base.edges(), w);
    } else {
      GenParams path;
      path.kind = GraphKind::path;
      path.n = 3;
      path.weights = mixed_samplers[i % 3];
      g = disjoint_union(base, generate(path, rng));
    }
    auto b = gamma_wR_bruteforce(g).value;
    o.expect(!is_thp_extremal(g) && b < g.total_weight(),
             [&] { return "perturbation attains w(G): " + dump(g); });
  }
  return o;
}

Outcome criterion_structure() {
  Outcome o;
  const char* ids[] = {"optima_v1_edges_equal_weight", "optima_no_v1_v2_edge", "optima_v2_gamma_w_set",
                       "min_v1_optimum_independent", "extremal_optima_structure", "witness_consistency"};
  VerifyOptions vo;
  vo.shrink = false;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(7007, i));
    auto g = random_graph(rng, 1, 8, i);
    auto r = verify_graph(g, vo);
    for (const char* id : ids) {
      const auto* c = r.find(id);
      o.expect(c && c->passed, [&] { return std::string(id) + (c ? ": " + c->detail : " missing") + " on " + dump(g); });
    }
  }
  return o;
}

Outcome criterion_cycles() {
  Outcome o;
  VerifyOptions vo;
  vo.shrink = false;
  auto r = verify_cycle_theorems(3, 12, 20, 8008, vo);
  for (const auto& c : r.checks)
    o.expect(c.passed, [&] { return c.id + ": " + c.detail; });
  auto tally = r.tally();
  o.expect(tally["cycle_upper_bound"].applicable == 10 * 20 * 3 + 1, [] { return "unexpected instance count"; });
  o.expect(tally["cycle_3k_nonconstant_equality"].passed == 1, [] { return "hexagon witness missing"; });
  o.expect(tally["cycle_constant_value"].applicable == 10 * 20, [] { return "constant instances missing"; });

  std::vector<Rational> hex{1, 2, 3, 3, 2, 1};
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  auto g = build_graph(6, e, hex);
  auto b = gamma_wR_bruteforce(g).value;
  o.expect(b == 8 && gamma_wR_dp(g).value == 8 && cycle_upper_bound(hex).formula == 8,
           [&] { return "hexagon gives " + to_string(b); });
  return o;
}

Outcome criterion_nordhaus_gaddum() {
  Outcome o;
  std::size_t applicable = 0;
  for (std::size_t i = 0; applicable < 100 && i < 10000; ++i) {
    Rng rng(derive_seed(9009, i));
    auto g = random_graph(rng, 3, 9, i);
    auto ng = nordhaus_gaddum(g);
    if (!ng.applicable) continue;
    ++applicable;
    o.expect(ng.lower <= ng.sum && ng.sum < ng.upper, [&] {
      return to_string(ng.lower) + " <= " + to_string(ng.sum) + " < " + to_string(ng.upper) + " fails on " + dump(g);
    });
  }
  o.expect(applicable == 100, [&] { return "only " + std::to_string(applicable) + " applicable graphs"; });
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  auto c4 = nordhaus_gaddum(build_graph(4, e, std::vector<Rational>(4, Rational(1))));
  o.expect(c4.applicable && c4.lower == 4 && c4.sum == 7 && c4.upper == 8, [&] {
    return "C4 gives " + to_string(c4.lower) + " <= " + to_string(c4.sum) + " < " + to_string(c4.upper);
  });
  return o;
}

Outcome criterion_performance() {
  Outcome o;
  SolveOptions brute12;
  brute12.labeling_guard = 12;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(10010, i));
    auto g = random_graph(rng, 1, 12, i);
    auto bnb = gamma_wR_branch_and_bound(g);
    auto b = gamma_wR_bruteforce(g, brute12).value;
    o.expect(bnb.value == b && is_wrdf(g, bnb.witness) && labeling_weight(g, bnb.witness) == b,
             [&] { return "bnb " + to_string(bnb.value) + " vs brute " + to_string(b) + " on " + dump(g); });
  }

  {
    GenParams p;
    p.kind = GraphKind::random;
    p.n = 25;
    p.p = Rational(3, 10);
    p.weights = IntegerUniform{1, 9};
    auto g = generate(p, 2500);
    auto t0 = Clock::now();
    auto r = gamma_wR_branch_and_bound(g);
    double secs = seconds_since(t0);
    std::ostringstream note;
    note << "n=25 p=0.3 solved in " << secs << " s";
    o.expect(secs < 10 && is_wrdf(g, r.witness) && labeling_weight(g, r.witness) == r.value,
             [&] { return note.str(); });
    std::cout << "    " << note.str() << ", gamma_wR = " << to_string(r.value) << "\n";
  }

  {
    GenParams p;
    p.kind = GraphKind::cycle;
    p.n = 100000;
    auto g = generate(p, 0);
    auto t0 = Clock::now();
    auto r = gamma_wR_dp(g);
    double secs = seconds_since(t0);
    const Rational expected((2 * 100000 + 2) / 3);
    std::ostringstream note;
    note << "C_100000 solved in " << secs << " s, value " << to_string(r.value);
    o.expect(secs < 1 && r.value == expected, [&] { return note.str(); });
    std::cout << "    " << note.str() << "\n";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "duality gamma_wR = w(G) - diff(G) on 500 random graphs", criterion_duality},
      {2, "complete-graph formula on 100 K_n", criterion_complete},
      {3, "complete bipartite formula on 100 K_{s,t}", criterion_bipartite},
      {4, "sandwich and edgeless characterization", criterion_sandwich},
      {5, "degree lower bound and its tightness on K_n", criterion_degree},
      {6, "weight upper bound and extremal characterization", criterion_weight},
      {7, "structure of optimal labelings on 200 graphs", criterion_structure},
      {8, "cycle bound, equality characterization, DP = brute force", criterion_cycles},
      {9, "Nordhaus-Gaddum bounds on 100 graphs", criterion_nordhaus_gaddum},
      {10, "branch-and-bound agreement and solver performance", criterion_performance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o = c.run();
    double secs = seconds_since(t0);
    const bool ok = o.failures == 0;
    failed += !ok;
    std::printf("%s criterion %2d: %s (%zu checks, %zu failures, %.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.name,
                o.checks, o.failures, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
