#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "wrd/bounds.hpp"
#include "wrd/differential.hpp"
#include "wrd/errors.hpp"
#include "wrd/families.hpp"
#include "wrd/generate.hpp"
#include "wrd/solvers.hpp"

using namespace wrd;

namespace {

const WeightedGraph p3 = fx::path(fx::wi({1, 5, 1}));
const WeightedGraph k3 = fx::complete(fx::wi({1, 2, 3}));

}  // namespace

TEST_SUITE("families") {

TEST_CASE("complete graphs") {
  auto r = gamma_wR_complete(fx::wi({1, 2, 3}));
  CHECK(r.value == 2);
  CHECK(r.witness == RomanLabeling{2, 0, 0});
  auto pp = gamma_wR_complete(fx::w({"5/2", "5/2"}));
  CHECK(pp.value == 5);
  CHECK_THROWS_AS(gamma_wR_complete(fx::wi({4})), GraphError);
  CHECK_THROWS_AS(gamma_wR_complete(fx::wi({1, 0})), GraphError);

  Rng rng(17);
  std::vector<Rational> w7;
  for (int i = 0; i < 7; ++i) w7.push_back(sample_weight(rng, RationalGrid{4, Rational(1, 4), Rational(5)}));
  auto g = fx::complete(w7);
  auto f = gamma_wR_complete(w7);
  CHECK(f.value == oracle::roman(g).value);
  CHECK(is_wrdf(g, f.witness));
}

TEST_CASE("complete bipartite graphs") {
  auto star = gamma_wR_star(Rational(10), fx::wi({1, 1, 1}));
  CHECK(star.value == 4);
  auto k23 = gamma_wR_complete_bipartite(fx::wi({1, 4}), fx::wi({2, 2, 2}));
  CHECK(k23.value == 6);
  CHECK(is_wrdf(fx::bipartite(fx::wi({1, 4}), fx::wi({2, 2, 2})), k23.witness));
  CHECK(gamma_wR_complete_bipartite(fx::wi({1, 1}), fx::wi({1, 1})).value == 3);
  CHECK_THROWS_AS(gamma_wR_complete_bipartite({}, fx::wi({1})), GraphError);
}

TEST_CASE("complete bipartite witnesses realize the value, either orientation") {
  Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const auto s = static_cast<std::size_t>(uniform_between(rng, 1, 4));
    const auto t = static_cast<std::size_t>(uniform_between(rng, 1, 5));
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i < s; ++i) xs.push_back(sample_weight(rng, IntegerUniform{1, 9}));
    for (std::size_t i = 0; i < t; ++i) ys.push_back(sample_weight(rng, IntegerUniform{1, 9}));
    auto g = fx::bipartite(xs, ys);
    auto r = gamma_wR_complete_bipartite(xs, ys);
    CHECK(r.value == oracle::roman(g).value);
    CHECK(is_wrdf(g, r.witness));
    CHECK(labeling_weight(g, r.witness) == r.value);
  }
}

TEST_CASE("cycle constructions") {
  auto c3 = cycle_constructions(fx::wi({1, 1, 1}));
  REQUIRE(c3.size() == 3);
  for (const auto& c : c3) CHECK(c.weight == 2);

  auto c4 = cycle_constructions(fx::wi({1, 1, 1, 1}));
  CHECK(c4[0].start == 1);
  CHECK(c4[0].labeling == RomanLabeling{1, 0, 2, 0});
  CHECK(c4[0].weight == 3);

  for (const auto& c : cycle_constructions(fx::wi({1, 1, 1, 1, 1}))) {
    CHECK(c.weight == 4);
    CHECK(c.labeling.count(2) == 2);
  }
  CHECK_THROWS_AS(cycle_constructions(fx::wi({1, 1})), GraphError);
  CHECK(cycle_construction_coefficient(9) == 6);
  CHECK(cycle_construction_coefficient(10) == 7);
  CHECK(cycle_construction_coefficient(11) == 8);
}

TEST_CASE("cycle bound") {
  auto unit = cycle_upper_bound(fx::wi({1, 1, 1, 1}));
  CHECK(unit.formula == 3);
  CHECK(gamma_wR_dp(fx::cycle(fx::wi({1, 1, 1, 1}))).value == unit.formula);

  auto skew = cycle_upper_bound(fx::wi({1, 1, 1, 2}));
  CHECK(skew.formula == Rational(15, 4));
  CHECK(oracle::roman(fx::cycle(fx::wi({1, 1, 1, 2}))).value == 3);

  auto hex = cycle_upper_bound(fx::wi({1, 2, 3, 3, 2, 1}));
  CHECK(hex.formula == 8);
  CHECK(oracle::roman(fx::cycle(fx::wi({1, 2, 3, 3, 2, 1}))).value == 8);

  CHECK(cycle_upper_bound(fx::wi({1, 1, 1, 1, 2})).formula == Rational(24, 5));
  CHECK(oracle::roman(fx::cycle(fx::wi({1, 1, 1, 1, 2}))).value == 4);
}

TEST_CASE("constant-weight cycles") {
  CHECK(gamma_wR_equal_cycle(3, 1) == 2);
  CHECK(gamma_wR_equal_cycle(7, Rational(1, 2)) == Rational(5, 2));
  CHECK(gamma_wR_equal_cycle(6, 2) == 8);
  CHECK(oracle::roman(fx::cycle(std::vector<Rational>(7, Rational(1, 2)))).value == Rational(5, 2));
  CHECK_THROWS_AS(gamma_wR_equal_cycle(2, 1), GraphError);
  CHECK_THROWS_AS(gamma_wR_equal_cycle(5, 0), GraphError);
}

}  // TEST_SUITE

TEST_SUITE("bounds") {

TEST_CASE("degree lower bound") {
  auto k = degree_lower_bound(k3);
  CHECK(k.raw == 2);
  CHECK(k.ceiled == Rational(2));
  CHECK(degree_lower_bound(build_graph(2, {{0, 1}}, {1, 1})).raw == 2);
  auto p = degree_lower_bound(p3);
  CHECK(p.raw == Rational(7, 3));
  CHECK(p.ceiled == Rational(3));
  auto frac = degree_lower_bound(build_graph(2, {{0, 1}}, {Rational(1, 2), Rational(3, 2)}));
  CHECK_FALSE(frac.ceiled.has_value());
  CHECK_THROWS_AS(degree_lower_bound(fx::edgeless(fx::wi({1, 2}))), GraphError);
}

TEST_CASE("sandwich") {
  auto p = sandwich_check(p3);
  CHECK(p.gamma_w == 2);
  CHECK(p.gamma_wR == 3);
  CHECK(p.ok());
  auto e = sandwich_check(fx::edgeless(fx::wi({1, 2, 3})));
  CHECK(e.gamma_w == 6);
  CHECK(e.gamma_wR == 6);
  CHECK(e.edgeless);
  CHECK(e.ok());
  auto k = sandwich_check(k3);
  CHECK(k.gamma_w == 1);
  CHECK(k.gamma_wR == 2);
  CHECK(k.ok());
}

TEST_CASE("weight bound and its extremal graphs") {
  auto matching = build_graph(5, {{0, 1}, {2, 3}}, {3, 3, 5, 5, 2});
  CHECK(is_thp_extremal(matching));
  CHECK(weight_upper_bound(matching) == 18);
  CHECK(oracle::roman(matching).value == 18);

  auto k2 = build_graph(2, {{0, 1}}, {1, 2});
  CHECK_FALSE(is_thp_extremal(k2));
  CHECK(oracle::roman(k2).value == 2);

  CHECK_FALSE(is_thp_extremal(fx::path(fx::wi({2, 2, 2}))));
  CHECK(is_thp_extremal(fx::edgeless(fx::wi({1, 2}))));
  CHECK_THROWS_AS(weight_upper_bound(build_graph(1, {}, {3})), GraphError);
}

TEST_CASE("Nordhaus-Gaddum") {
  auto c4 = nordhaus_gaddum(fx::cycle(fx::wi({1, 1, 1, 1})));
  REQUIRE(c4.applicable);
  CHECK(c4.lower == 4);
  CHECK(c4.sum == 7);
  CHECK(c4.upper == 8);
  CHECK(c4.ok());

  auto p4 = nordhaus_gaddum(fx::path(fx::wi({1, 1, 1, 1})));
  REQUIRE(p4.applicable);
  CHECK(p4.sum == 6);
  CHECK(p4.ok());

  CHECK_FALSE(nordhaus_gaddum(k3).applicable);
  CHECK(nordhaus_gaddum(k3).ok());
}

TEST_CASE("bounds report") {
  auto r = bounds_report(p3);
  CHECK(r.gamma_w == Rational(2));
  CHECK(r.gamma_wR == Rational(3));
  CHECK(r.degree_lower_bound == Rational(7, 3));
  CHECK(r.weight_upper_bound == 7);
  CHECK_FALSE(r.thp_extremal);
  CHECK(r.ok());

  GenParams big;
  big.kind = GraphKind::path;
  big.n = 16;
  auto b = bounds_report(generate(big, 0));
  CHECK(b.gamma_w == Rational(6));
  CHECK(b.gamma_wR == Rational(11));  // branch and bound takes over past the exhaustive guard
  CHECK(b.ok());

  big.n = 22;
  auto c = bounds_report(generate(big, 0));
  CHECK_FALSE(c.gamma_w.has_value());
  CHECK(c.gamma_wR == Rational(15));
}

}  // TEST_SUITE

TEST_SUITE("differential") {

TEST_CASE("boundary") {
  CHECK(boundary(p3, VertexSet{}).empty());
  CHECK(boundary(p3, VertexSet{0}) == VertexSet{1});
  CHECK(boundary(k3, VertexSet{0}) == VertexSet{1, 2});
  CHECK_THROWS_AS(boundary(p3, VertexSet{3}), GraphError);
}

TEST_CASE("differential of a set") {
  CHECK(differential_of_set(p3, VertexSet{0}) == 4);
  CHECK(differential_of_set(p3, VertexSet{1}) == -3);
  CHECK(differential_of_set(k3, VertexSet{}) == 0);
  CHECK_THROWS_AS(differential_of_set(p3, VertexSet{9}), GraphError);
}

TEST_CASE("differential of a graph") {
  auto p = differential_of_graph(p3);
  CHECK(p.value == 4);
  CHECK(p.best_set == VertexSet{0});
  CHECK(p.boundary == VertexSet{1});
  auto k = differential_of_graph(k3);
  CHECK(k.value == 4);
  CHECK(k.best_set == VertexSet{0});
  auto e = differential_of_graph(fx::edgeless(fx::wi({3, 1, 4, 1, 5})));
  CHECK(e.value == 0);
  CHECK(e.best_set.empty());
  CHECK_THROWS_AS(differential_of_graph(p3, 2), SizeGuardError);
}

TEST_CASE("duality against the oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GenParams p;
    p.kind = GraphKind::random;
    p.n = static_cast<std::size_t>(uniform_between(rng, 1, 8));
    p.p = Rational(uniform_between(rng, 1, 3), 4);
    p.weights = RationalGrid{5, Rational(1, 5), Rational(4)};
    auto g = generate(p, rng);
    auto d = differential_of_graph(g);
    CHECK(d.value == oracle::differential(g));
    CHECK(differential_of_set(g, d.best_set) == d.value);
    CHECK(g.total_weight() - d.value == oracle::roman(g).value);
  }
}

}  // TEST_SUITE
