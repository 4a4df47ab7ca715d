#include "wrd/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "subset_order.hpp"
#include "wrd/errors.hpp"

namespace wrd {

namespace {

using Mask = std::uint64_t;
using Wide = __int128;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

RomanLabeling to_labeling(const std::vector<std::uint8_t>& labels) { return RomanLabeling(labels); }

void check_labeling_guard(const WeightedGraph& g, const SolveOptions& opts, const char* routine) {
  if (g.size() > opts.labeling_guard) throw SizeGuardError(g.size(), opts.labeling_guard, routine);
  if (g.size() > 64) throw SizeGuardError(g.size(), 64, routine);
}

// Largest (w(v) + w(N(v))) / w(v) over v, as a numerator/denominator pair.
// The degree bound says any wRDF weighs at least 2 w(G) * den / num.
std::pair<std::int64_t, std::int64_t> max_closed_ratio(const WeightedGraph& g,
                                                       const ScaledWeights& sw) {
  std::int64_t best_num = 1, best_den = 1;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::int64_t cov = sw.values[v];
    for (Vertex u : g.neighbors(v)) cov += sw.values[u];
    if (Wide(cov) * best_den > Wide(best_num) * sw.values[v]) {
      best_num = cov;
      best_den = sw.values[v];
    }
  }
  return {best_num, best_den};
}

// Lexicographic DFS over labelings. Vertex u is "closed" once every member
// of N[u] has a label; at that point a 0 on u must see a 2 in N(u).
class ExhaustiveSearch {
 public:
  enum class Mode { first_lexicographic, min_v1, all };

  ExhaustiveSearch(const WeightedGraph& g, Mode mode)
      : mode_(mode),
        n_(g.size()),
        sw_(scale_to_integers(g.weights())),
        nbr_(neighbor_masks(g)),
        closing_(n_),
        labels_(n_, 0),
        best_labels_(n_, 1) {
    for (Vertex u = 0; u < n_; ++u) {
      Vertex last = u;
      for (Vertex v : g.neighbors(u)) last = std::max(last, v);
      closing_[last].push_back(u);
    }
    // The all-ones labeling weighs w(G), so some leaf always beats this.
    incumbent_ = n_ == 0 ? 0 : sw_.total + 1;
    if (mode_ == Mode::first_lexicographic && g.edge_count() > 0) {
      auto [num, den] = max_closed_ratio(g, sw_);
      stop_num_ = Wide(2) * sw_.total * den;
      stop_den_ = num;
    }
  }

  void run() {
    if (n_ > 0) descend(0, 0, 0, 0);
  }

  Rational value() const { return sw_.to_rational(incumbent_); }
  const std::vector<std::uint8_t>& best() const { return best_labels_; }
  const std::vector<std::vector<std::uint8_t>>& optima() const { return optima_; }

 private:
  void descend(Vertex v, std::int64_t committed, Mask twos, std::size_t ones) {
    if (stopped_) return;
    if (v == n_) {
      record(committed, ones);
      return;
    }
    for (std::uint8_t label = 0; label <= 2; ++label) {
      std::int64_t c = committed + label * sw_.values[v];
      if (mode_ == Mode::first_lexicographic ? c >= incumbent_ : c > incumbent_) continue;
      labels_[v] = label;
      Mask t = label == 2 ? twos | bit(v) : twos;
      bool ok = true;
      for (Vertex u : closing_[v])
        if (labels_[u] == 0 && !(nbr_[u] & t)) {
          ok = false;
          break;
        }
      if (ok) descend(v + 1, c, t, ones + (label == 1));
      if (stopped_) return;
    }
  }

  void record(std::int64_t weight, std::size_t ones) {
    switch (mode_) {
      case Mode::first_lexicographic:
        // Only strict improvements reach here; lexicographic visiting order
        // makes the first optimum the smallest one.
        incumbent_ = weight;
        best_labels_ = labels_;
        if (stop_den_ > 0 && Wide(incumbent_) * stop_den_ <= stop_num_) stopped_ = true;
        break;
      case Mode::min_v1:
        if (weight < incumbent_ || ones < best_v1_) {
          incumbent_ = weight;
          best_labels_ = labels_;
          best_v1_ = ones;
        }
        break;
      case Mode::all:
        if (weight < incumbent_) {
          optima_.clear();
          incumbent_ = weight;
        }
        optima_.push_back(labels_);
        break;
    }
  }

  Mode mode_;
  std::size_t n_;
  ScaledWeights sw_;
  std::vector<Mask> nbr_;
  std::vector<std::vector<Vertex>> closing_;
  std::vector<std::uint8_t> labels_;

  std::int64_t incumbent_ = 0;
  std::vector<std::uint8_t> best_labels_;
  std::size_t best_v1_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::uint8_t>> optima_;
  bool stopped_ = false;
  Wide stop_num_ = 0, stop_den_ = 0;
};

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "brute") return Method::brute;
  if (name == "bnb") return Method::bnb;
  if (name == "dp") return Method::dp;
  if (name == "diff") return Method::diff;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::bnb: return "bnb";
    case Method::dp: return "dp";
    case Method::diff: return "diff";
  }
  return "unknown";
}

SolveResult gamma_wR_bruteforce(const WeightedGraph& g, const SolveOptions& opts) {
  if (opts.enumerate_all_optima) return enumerate_all_optima(g, opts);
  check_labeling_guard(g, opts, "gamma_wR_bruteforce");
  ExhaustiveSearch search(g, opts.tie_break_min_v1 ? ExhaustiveSearch::Mode::min_v1
                                                   : ExhaustiveSearch::Mode::first_lexicographic);
  search.run();
  return {search.value(), to_labeling(search.best()), Method::brute, std::nullopt};
}

SolveResult enumerate_all_optima(const WeightedGraph& g, const SolveOptions& opts) {
  check_labeling_guard(g, opts, "enumerate_all_optima");
  ExhaustiveSearch search(g, ExhaustiveSearch::Mode::all);
  search.run();
  std::vector<RomanLabeling> optima;
  for (const auto& labels : search.optima()) optima.push_back(to_labeling(labels));
  std::sort(optima.begin(), optima.end());
  SolveResult out{search.value(), optima.empty() ? RomanLabeling() : optima.front(), Method::brute,
                  std::nullopt};
  if (opts.tie_break_min_v1) {
    out.witness = *std::min_element(optima.begin(), optima.end(), [](const auto& a, const auto& b) {
      auto ca = a.count(1), cb = b.count(1);
      return ca != cb ? ca < cb : a < b;
    });
  }
  out.all_optima = std::move(optima);
  return out;
}

DominationResult gamma_w_bruteforce(const WeightedGraph& g, std::size_t guard) {
  const std::size_t n = g.size();
  if (n > guard) throw SizeGuardError(n, guard, "gamma_w_bruteforce");
  if (n > 62) throw SizeGuardError(n, 62, "gamma_w_bruteforce");
  const ScaledWeights sw = scale_to_integers(g.weights());
  if (n == 0) return {Rational(0), VertexSet()};

  // Gray-code walk with per-vertex counts |N[v] ∩ D|.
  std::vector<int> hits(n, 0);
  std::size_t covered = 0;
  Mask set = 0;
  std::int64_t weight = 0;
  std::int64_t best = sw.total + 1;
  Mask best_set = 0;
  auto touch = [&](Vertex v, int delta) {
    int before = hits[v];
    hits[v] += delta;
    if (before == 0 && hits[v] > 0) ++covered;
    if (before > 0 && hits[v] == 0) --covered;
  };
  const Mask steps = Mask{1} << n;
  for (Mask i = 1; i < steps; ++i) {
    const auto x = static_cast<Vertex>(std::countr_zero(i));
    const int delta = (set & bit(x)) ? -1 : 1;
    set ^= bit(x);
    weight += delta * sw.values[x];
    touch(x, delta);
    for (Vertex y : g.neighbors(x)) touch(y, delta);
    if (covered == n && (weight < best || (weight == best && detail::subset_preferred(set, best_set)))) {
      best = weight;
      best_set = set;
    }
  }
  return {sw.to_rational(best), VertexSet::from_mask(best_set)};
}

SolveResult gamma_wR_via_differential(const WeightedGraph& g, const SolveOptions& opts) {
  DifferentialResult d = differential_of_graph(g, opts.subset_guard);
  RomanLabeling f(g.size(), 1);
  for (Vertex v : d.best_set) f.set(v, 2);
  for (Vertex v : d.boundary) f.set(v, 0);
  Rational value = g.total_weight() - d.value;
  if (labeling_weight(g, f) != value || !is_wrdf(g, f))
    throw TheoremViolation("differential witness construction", to_string(f));
  return {value, std::move(f), Method::diff, std::nullopt};
}

// ---------------------------------------------------------------------------
// Degree <= 2 dynamic programming.

namespace {

// States after labeling a vertex of a path sweep.
enum State : std::uint8_t {
  two = 0,        // label 2
  one = 1,        // label 1
  zero_ok = 2,    // label 0, already has a 2-neighbor behind it
  zero_need = 3,  // label 0, needs the next vertex to be 2
};
constexpr std::uint8_t label_of[4] = {2, 1, 0, 0};
constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

struct PathRun {
  std::int64_t cost = inf;
  std::vector<std::uint8_t> labels;
};

// Runs the sweep over `order` starting from a single forced state of
// order[0]. `accept(final_state)` filters admissible end states.
template <class Accept>
PathRun sweep(const std::vector<Vertex>& order, const std::vector<std::int64_t>& w, State start,
              Accept accept) {
  const std::size_t m = order.size();
  std::vector<std::array<std::uint8_t, 4>> parent(m);
  std::array<std::int64_t, 4> cost;
  cost.fill(inf);
  cost[start] = label_of[start] * w[order[0]];

  for (std::size_t i = 1; i < m; ++i) {
    std::array<std::int64_t, 4> next;
    next.fill(inf);
    const std::int64_t wv = w[order[i]];
    auto relax = [&](State to, std::uint8_t from, std::int64_t c) {
      if (c < next[to]) {
        next[to] = c;
        parent[i][to] = from;
      }
    };
    for (std::uint8_t s = 0; s < 4; ++s) {
      if (cost[s] >= inf) continue;
      relax(two, s, cost[s] + 2 * wv);
      if (s != zero_need) relax(one, s, cost[s] + wv);
      if (s == two) relax(zero_ok, s, cost[s]);
      if (s == one || s == zero_ok) relax(zero_need, s, cost[s]);
    }
    cost = next;
  }

  PathRun run;
  std::uint8_t end = 4;
  for (std::uint8_t s = 0; s < 4; ++s)
    if (cost[s] < run.cost && accept(static_cast<State>(s))) {
      run.cost = cost[s];
      end = s;
    }
  if (end == 4) return run;
  run.labels.resize(m);
  std::uint8_t s = end;
  for (std::size_t i = m; i-- > 0;) {
    run.labels[i] = label_of[s];
    if (i > 0) s = parent[i][s];
  }
  return run;
}

// Walks a component of max degree <= 2 from an endpoint, or from its
// smallest vertex towards its smaller neighbor if it is a cycle.
std::vector<Vertex> walk(const WeightedGraph& g, const std::vector<Vertex>& comp, bool cycle) {
  Vertex start = comp.front();
  if (!cycle)
    for (Vertex v : comp)
      if (g.degree(v) <= 1) {
        start = v;
        break;
      }
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> order{start};
  order.reserve(comp.size());
  Vertex prev = none, cur = start;
  while (order.size() < comp.size()) {
    Vertex next = none;
    for (Vertex u : g.neighbors(cur))
      if (u != prev) {
        next = u;
        break;
      }
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace

SolveResult gamma_wR_dp(const WeightedGraph& g) {
  if (max_degree(g) > 2)
    throw GraphError(GraphError::Kind::invalid_parameter,
                     "gamma_wR_dp requires maximum degree <= 2");
  const ScaledWeights sw = scale_to_integers(g.weights());
  const auto& w = sw.values;
  RomanLabeling f(g.size(), 0);
  std::int64_t total = 0;

  for (const auto& comp : connected_components(g)) {
    std::size_t edges = 0;
    for (Vertex v : comp) edges += g.degree(v);
    edges /= 2;
    const bool cycle = edges == comp.size();
    const auto order = walk(g, comp, cycle);

    PathRun best;
    if (!cycle) {
      for (State s : {two, one, zero_need}) {
        auto run = sweep(order, w, s, [](State end) { return end != zero_need; });
        if (run.cost < best.cost) best = std::move(run);
      }
    } else {
      // Close the cycle: the last vertex may rely on the first being 2, and
      // a first vertex labelled 0 is covered by its successor or by the last.
      auto run_two = sweep(order, w, two, [](State) { return true; });
      auto run_one = sweep(order, w, one, [](State end) { return end != zero_need; });
      auto run_zero_next = sweep(order, w, zero_need, [](State end) { return end != zero_need; });
      auto run_zero_last = sweep(order, w, zero_ok, [](State end) { return end == two; });
      for (auto* run : {&run_two, &run_one, &run_zero_next, &run_zero_last})
        if (run->cost < best.cost) best = std::move(*run);
    }
    total += best.cost;
    for (std::size_t i = 0; i < order.size(); ++i) f.set(order[i], best.labels[i]);
  }
  return {sw.to_rational(total), std::move(f), Method::dp, std::nullopt};
}

// ---------------------------------------------------------------------------
// Branch and bound.

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const WeightedGraph& g)
      : n_(g.size()), sw_(scale_to_integers(g.weights())), nbr_(neighbor_masks(g)), labels_(n_, 3) {
    incumbent_ = sw_.total;
    best_.assign(n_, 1);
  }

  void run() {
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    search(all, 0, 0, 0, 0, 0);
  }

  Rational value() const { return sw_.to_rational(incumbent_); }
  const std::vector<std::uint8_t>& best() const { return best_; }

 private:
  std::int64_t weight(Mask m) const {
    std::int64_t s = 0;
    while (m) {
      s += sw_.values[std::countr_zero(m)];
      m &= m - 1;
    }
    return s;
  }

  // undecided: unlabelled vertices; twos/ones: labelled 2/1; near_ones:
  // union of N(v) over ones; uncovered: 0-labelled vertices with no 2-neighbor.
  void search(Mask undecided, Mask twos, Mask ones, Mask near_ones, Mask uncovered,
              std::int64_t committed) {
    if (!undecided) {
      if (!uncovered && committed < incumbent_) {
        incumbent_ = committed;
        best_ = labels_;
      }
      return;
    }

    Mask dominated = 0;
    for (Mask t = twos; t; t &= t - 1) dominated |= nbr_[std::countr_zero(t)];
    const Mask can_be_two = undecided & ~near_ones;
    for (Mask z = uncovered; z; z &= z - 1)
      if (!(nbr_[std::countr_zero(z)] & can_be_two)) return;

    // Vertices that still have to be paid for.
    const Mask residual = (undecided & ~dominated) | uncovered;
    const std::int64_t w_residual = weight(residual);
    if (w_residual == 0) {
      // Everything left is dominated: labelling it all 0 costs nothing.
      if (committed < incumbent_) {
        for (Mask u = undecided; u; u &= u - 1) labels_[std::countr_zero(u)] = 0;
        incumbent_ = committed;
        best_ = labels_;
        for (Mask u = undecided; u; u &= u - 1) labels_[std::countr_zero(u)] = 3;
      }
      return;
    }

    Vertex pick = 64;
    std::int64_t pick_cov = 0, pick_w = 1;
    std::int64_t ratio_num = 2, ratio_den = 1;  // max(2, best coverage ratio)
    for (Mask u = undecided; u; u &= u - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(u));
      const std::int64_t cov = weight((nbr_[v] | bit(v)) & residual);
      const std::int64_t wv = sw_.values[v];
      if (pick == 64 || Wide(cov) * pick_w > Wide(pick_cov) * wv) {
        pick = v;
        pick_cov = cov;
        pick_w = wv;
      }
      if ((can_be_two & bit(v)) && Wide(cov) * ratio_den > Wide(ratio_num) * wv) {
        ratio_num = cov;
        ratio_den = wv;
      }
    }
    // Each unit of cost covers at most ratio/2 units of residual weight.
    const std::int64_t gap = incumbent_ - committed;
    if (gap <= 0 || Wide(2) * w_residual * ratio_den >= Wide(gap) * ratio_num) return;

    const Vertex v = pick;
    const Mask b = bit(v);
    const Mask rest = undecided & ~b;
    const std::int64_t wv = sw_.values[v];

    // Label 2: forbidden next to a 1 (such an optimum could drop the 1).
    if (!(nbr_[v] & ones)) {
      labels_[v] = 2;
      search(rest, twos | b, ones, near_ones, uncovered & ~nbr_[v], committed + 2 * wv);
    }
    // Label 0: needs a present or possible 2-neighbor.
    const bool covered = (nbr_[v] & twos) != 0;
    if (covered || (nbr_[v] & rest & ~near_ones)) {
      labels_[v] = 0;
      search(rest, twos, ones, near_ones, covered ? uncovered : uncovered | b, committed);
    }
    // Label 1: some optimum with fewest 1s has V1 independent and no V1-V2 edge.
    if (!(nbr_[v] & (ones | twos))) {
      labels_[v] = 1;
      search(rest, twos, ones | b, near_ones | nbr_[v], uncovered, committed + wv);
    }
    labels_[v] = 3;
  }

  std::size_t n_;
  ScaledWeights sw_;
  std::vector<Mask> nbr_;
  std::vector<std::uint8_t> labels_;
  std::int64_t incumbent_ = 0;
  std::vector<std::uint8_t> best_;
};

}  // namespace

SolveResult gamma_wR_branch_and_bound(const WeightedGraph& g, const SolveOptions&) {
  if (g.size() > 64) throw SizeGuardError(g.size(), 64, "gamma_wR_branch_and_bound");
  BranchAndBound bnb(g);
  bnb.run();
  return {bnb.value(), to_labeling(bnb.best()), Method::bnb, std::nullopt};
}

SolveResult solve(const WeightedGraph& g, const SolveOptions& opts) {
  if (opts.enumerate_all_optima) return enumerate_all_optima(g, opts);
  switch (opts.method) {
    case Method::brute: return gamma_wR_bruteforce(g, opts);
    case Method::bnb: return gamma_wR_branch_and_bound(g, opts);
    case Method::dp: return gamma_wR_dp(g);
    case Method::diff: return gamma_wR_via_differential(g, opts);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace wrd
