#include "wrd/generate.hpp"

#include <limits>
#include <stdexcept>

#include "wrd/errors.hpp"

namespace wrd {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw GraphError(GraphError::Kind::invalid_parameter, what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::int64_t to_int(std::string_view s) {
  Rational r = parse_rational(s);
  if (!is_integer(r) || !r.get_num().fits_slong_p()) invalid("expected integer, got '" + std::string(s) + "'");
  return r.get_num().get_si();
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_between: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

bool bernoulli(Rng& rng, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("bernoulli: p outside [0,1]");
  if (!p.get_den().fits_ulong_p()) throw std::invalid_argument("bernoulli: denominator too large");
  return uniform_below(rng, p.get_den().get_ui()) < p.get_num().get_ui();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational sample_weight(Rng& rng, const WeightSampler& sampler) {
  struct Visitor {
    Rng& rng;
    Rational operator()(const ConstantWeight& c) const { return c.value; }
    Rational operator()(const IntegerUniform& u) const {
      return Rational(static_cast<long>(uniform_between(rng, u.lo, u.hi)));
    }
    Rational operator()(const RationalGrid& g) const {
      Rational den(static_cast<long>(g.denominator));
      auto lo = wrd::ceil(g.lo * den).get_num().get_si();
      auto hi = wrd::floor(g.hi * den).get_num().get_si();
      Rational r(static_cast<long>(uniform_between(rng, lo, hi)), static_cast<unsigned long>(g.denominator));
      r.canonicalize();
      return r;
    }
  };
  return std::visit(Visitor{rng}, sampler);
}

WeightSampler parse_sampler(std::string_view text) {
  auto parts = split(text, ':');
  if (parts[0] == "const" && parts.size() == 2) {
    ConstantWeight c{parse_rational(parts[1])};
    if (sgn(c.value) <= 0) invalid("constant weight must be positive");
    return c;
  }
  if (parts[0] == "int" && parts.size() == 3) {
    IntegerUniform u{to_int(parts[1]), to_int(parts[2])};
    if (u.lo < 1 || u.lo > u.hi) invalid("integer weight range must satisfy 1 <= lo <= hi");
    return u;
  }
  if (parts[0] == "grid" && parts.size() == 4) {
    RationalGrid g{to_int(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
    if (g.denominator < 1 || sgn(g.lo) <= 0 || g.lo > g.hi ||
        wrd::ceil(g.lo * g.denominator) > wrd::floor(g.hi * g.denominator))
      invalid("rational grid must be non-empty and positive");
    return g;
  }
  invalid("unknown weight sampler '" + std::string(text) + "'");
}

std::string to_string(const WeightSampler& sampler) {
  struct Visitor {
    std::string operator()(const ConstantWeight& c) const { return "const:" + to_string(c.value); }
    std::string operator()(const IntegerUniform& u) const {
      return "int:" + std::to_string(u.lo) + ":" + std::to_string(u.hi);
    }
    std::string operator()(const RationalGrid& g) const {
      return "grid:" + std::to_string(g.denominator) + ":" + to_string(g.lo) + ":" + to_string(g.hi);
    }
  };
  return std::visit(Visitor{}, sampler);
}

namespace {

constexpr std::pair<GraphKind, std::string_view> kind_names[] = {
    {GraphKind::path, "path"},
    {GraphKind::cycle, "cycle"},
    {GraphKind::complete, "complete"},
    {GraphKind::complete_bipartite, "complete_bipartite"},
    {GraphKind::star, "star"},
    {GraphKind::empty, "empty"},
    {GraphKind::random, "random"},
    {GraphKind::disjoint_union, "disjoint_union"},
    {GraphKind::equal_matching, "equal_matching"},
};

}  // namespace

GraphKind parse_graph_kind(std::string_view name) {
  for (const auto& [kind, text] : kind_names)
    if (text == name) return kind;
  invalid("unknown graph kind '" + std::string(name) + "'");
}

std::string to_string(GraphKind kind) {
  for (const auto& [k, text] : kind_names)
    if (k == kind) return std::string(text);
  return "unknown";
}

WeightedGraph generate(const GenParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return generate(params, rng);
}

WeightedGraph generate(const GenParams& params, Rng& rng) {
  auto draw_weights = [&](std::size_t count) {
    std::vector<Rational> w;
    w.reserve(count);
    for (std::size_t i = 0; i < count; ++i) w.push_back(sample_weight(rng, params.weights));
    return w;
  };

  std::vector<Edge> edges;
  switch (params.kind) {
    case GraphKind::path: {
      if (params.n < 1) invalid("path needs n >= 1");
      auto w = draw_weights(params.n);
      for (Vertex v = 0; v + 1 < params.n; ++v) edges.emplace_back(v, v + 1);
      return build_graph(params.n, edges, w);
    }
    case GraphKind::cycle: {
      if (params.n < 3) invalid("cycle needs n >= 3");
      auto w = draw_weights(params.n);
      for (Vertex v = 0; v + 1 < params.n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, params.n - 1);
      return build_graph(params.n, edges, w);
    }
    case GraphKind::complete: {
      if (params.n < 1) invalid("complete graph needs n >= 1");
      auto w = draw_weights(params.n);
      for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v) edges.emplace_back(u, v);
      return build_graph(params.n, edges, w);
    }
    case GraphKind::complete_bipartite:
    case GraphKind::star: {
      std::size_t s = params.kind == GraphKind::star ? 1 : params.s;
      if (s < 1 || params.t < 1) invalid("complete bipartite graph needs s, t >= 1");
      auto w = draw_weights(s + params.t);
      for (Vertex x = 0; x < s; ++x)
        for (Vertex y = s; y < s + params.t; ++y) edges.emplace_back(x, y);
      return build_graph(s + params.t, edges, w);
    }
    case GraphKind::empty: {
      auto w = draw_weights(params.n);
      return build_graph(params.n, edges, w);
    }
    case GraphKind::random: {
      if (params.p < 0 || params.p > 1) invalid("edge probability must lie in [0,1]");
      auto w = draw_weights(params.n);
      for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v)
          if (bernoulli(rng, params.p)) edges.emplace_back(u, v);
      return build_graph(params.n, edges, w);
    }
    case GraphKind::disjoint_union: {
      if (params.parts.empty()) invalid("disjoint_union needs at least one part");
      WeightedGraph g = generate(params.parts.front(), rng);
      for (std::size_t i = 1; i < params.parts.size(); ++i)
        g = disjoint_union(g, generate(params.parts[i], rng));
      return g;
    }
    case GraphKind::equal_matching: {
      if (params.s + params.t < 1) invalid("equal_matching needs at least one vertex");
      std::vector<Rational> w;
      for (std::size_t i = 0; i < params.s; ++i) {
        Rational x = sample_weight(rng, params.weights);
        w.push_back(x);
        w.push_back(x);
        edges.emplace_back(2 * i, 2 * i + 1);
      }
      for (std::size_t i = 0; i < params.t; ++i) w.push_back(sample_weight(rng, params.weights));
      return build_graph(w.size(), edges, w);
    }
  }
  invalid("unhandled graph kind");
}

}  // namespace wrd
