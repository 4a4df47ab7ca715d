#include "wrd/families.hpp"

#include <algorithm>
#include <numeric>

#include "wrd/errors.hpp"

namespace wrd {

namespace {

void require_positive(std::span<const Rational> weights) {
  for (const auto& w : weights)
    if (sgn(w) <= 0) throw GraphError(GraphError::Kind::non_positive_weight, "weights must be positive");
}

std::vector<std::size_t> order_by_weight(std::span<const Rational> w) {
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  return idx;
}

}  // namespace

FamilyResult gamma_wR_complete(std::span<const Rational> weights) {
  if (weights.size() < 2)
    throw GraphError(GraphError::Kind::invalid_parameter, "complete graph formula needs n >= 2");
  require_positive(weights);
  auto lightest = static_cast<std::size_t>(std::min_element(weights.begin(), weights.end()) - weights.begin());
  RomanLabeling f(weights.size(), 0);
  f.set(lightest, 2);
  return {2 * weights[lightest], std::move(f)};
}

FamilyResult gamma_wR_complete_bipartite(std::span<const Rational> x_weights,
                                         std::span<const Rational> y_weights) {
  if (x_weights.empty() || y_weights.empty())
    throw GraphError(GraphError::Kind::invalid_parameter, "complete bipartite graph needs both classes non-empty");
  require_positive(x_weights);
  require_positive(y_weights);

  // Orient so that |X| <= |Y|; remember where each class lives in the output.
  const bool swapped = x_weights.size() > y_weights.size();
  auto xs = swapped ? y_weights : x_weights;
  auto ys = swapped ? x_weights : y_weights;
  const std::size_t x_offset = swapped ? x_weights.size() : 0;
  const std::size_t y_offset = swapped ? 0 : x_weights.size();

  const auto x_order = order_by_weight(xs);
  const auto y_order = order_by_weight(ys);
  const std::size_t x1 = x_order.front(), y1 = y_order.front();
  const Rational wx = sum(xs), wy = sum(ys);

  RomanLabeling f(xs.size() + ys.size(), 0);
  auto set_x = [&](std::size_t i, std::uint8_t l) { f.set(x_offset + i, l); };
  auto set_y = [&](std::size_t j, std::uint8_t l) { f.set(y_offset + j, l); };

  // Candidate 1: 2 on x1, 0 on Y (s = 1), or 1 on the rest of X (s >= 2).
  const Rational heavy_x = xs.size() == 1 ? Rational(2 * xs[x1]) : Rational(xs[x1] + wx);
  // Candidate 2: 2 on y1, 1 on the rest of Y, 0 on X.
  const Rational heavy_y = ys[y1] + wy;
  // Candidate 3 (s >= 2): 2 on x1 and y1, 0 elsewhere.
  const Rational both = 2 * (xs[x1] + ys[y1]);

  Rational value = std::min(heavy_x, heavy_y);
  if (xs.size() >= 2) value = std::min(value, both);

  if (value == heavy_x) {
    for (std::size_t i = 0; i < xs.size(); ++i) set_x(i, 1);
    set_x(x1, 2);
  } else if (value == heavy_y) {
    for (std::size_t j = 0; j < ys.size(); ++j) set_y(j, 1);
    set_y(y1, 2);
  } else {
    set_x(x1, 2);
    set_y(y1, 2);
  }
  return {value, std::move(f)};
}

FamilyResult gamma_wR_star(const Rational& center, std::span<const Rational> leaves) {
  const Rational c[1] = {center};
  return gamma_wR_complete_bipartite(c, leaves);
}

std::size_t cycle_construction_coefficient(std::size_t n) {
  const std::size_t k = n / 3;
  return 2 * k + n % 3;
}

std::vector<CycleConstruction> cycle_constructions(std::span<const Rational> weights) {
  const std::size_t n = weights.size();
  if (n < 3) throw GraphError(GraphError::Kind::invalid_parameter, "cycle needs n >= 3");
  require_positive(weights);
  const std::size_t k = n / 3, residue = n % 3;

  std::vector<CycleConstruction> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    RomanLabeling f(n, 0);
    switch (residue) {
      case 0:
        for (std::size_t i = 0; i < k; ++i) f.set((m + 3 * i) % n, 2);
        break;
      case 1:
        f.set(m, 1);
        for (std::size_t i = 0; i < k; ++i) f.set((m + 2 + 3 * i) % n, 2);
        break;
      default:
        for (std::size_t i = 0; i <= k; ++i) f.set((m + 3 * i) % n, 2);
        break;
    }
    Rational w = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (f[v]) w += weights[v] * static_cast<unsigned long>(f[v]);
    out.push_back({m + 1, std::move(f), std::move(w), residue});
  }
  return out;
}

CycleBound cycle_upper_bound(std::span<const Rational> weights) {
  auto constructions = cycle_constructions(weights);
  const std::size_t n = weights.size();
  const auto k = static_cast<unsigned long>(n / 3);
  const Rational formula = Rational(static_cast<unsigned long>(n) - k) / static_cast<unsigned long>(n) * sum(weights);
  auto best = std::min_element(constructions.begin(), constructions.end(),
                               [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return {formula, best->weight, *best};
}

Rational gamma_wR_equal_cycle(std::size_t n, const Rational& p) {
  if (n < 3) throw GraphError(GraphError::Kind::invalid_parameter, "cycle needs n >= 3");
  if (sgn(p) <= 0) throw GraphError(GraphError::Kind::non_positive_weight, "weight must be positive");
  return Rational(static_cast<unsigned long>((2 * n + 2) / 3)) * p;
}

}  // namespace wrd
