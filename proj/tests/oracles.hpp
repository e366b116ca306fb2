#pragma once

// Independent brute-force references used only by the test suites. Nothing
// here calls the solvers it is meant to check.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cliquepack/exact_lp.hpp"
#include "cliquepack/graph.hpp"
#include "cliquepack/lab.hpp"

namespace oracle {

using cliquepack::Clique;
using cliquepack::Graph;
using cliquepack::Rational;

/// Every r-subset of vertices, filtered by pairwise adjacency.
inline std::vector<Clique> cliques_by_subsets(const Graph& g, int r) {
  std::vector<Clique> out;
  const int n = g.order();
  if (r > n) return out;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    bool ok = true;
    for (int a = 0; a < r && ok; ++a) {
      for (int b = a + 1; b < r && ok; ++b) ok = g.adjacent(pick[a], pick[b]);
    }
    if (ok) out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Maximum number of pairwise edge-disjoint r-cliques by plain exhaustive search.
inline int nu_by_exhaustion(const Graph& g, int r) {
  const auto cliques = cliques_by_subsets(g, r);
  std::vector<std::vector<std::pair<int, int>>> edges;
  for (const auto& q : cliques) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b) es.emplace_back(q[a], q[b]);
    edges.push_back(es);
  }
  std::vector<std::vector<char>> used(static_cast<std::size_t>(g.order()),
                                      std::vector<char>(static_cast<std::size_t>(g.order()), 0));
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, int count) -> void {
    best = std::max(best, count);
    for (std::size_t j = i; j < cliques.size(); ++j) {
      bool free = std::none_of(edges[j].begin(), edges[j].end(),
                               [&](auto e) { return used[e.first][e.second]; });
      if (!free) continue;
      for (auto e : edges[j]) used[e.first][e.second] = 1;
      self(self, j + 1, count + 1);
      for (auto e : edges[j]) used[e.first][e.second] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

/// Solves A x = b exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> gauss(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Optimum of a bounded LP by enumerating every basic solution: choose
/// num_vars tight rows among {A x <= b} ∪ {x >= 0}. nullopt if infeasible.
inline std::optional<Rational> lp_by_vertex_enumeration(const cliquepack::LinearProgram& lp) {
  const int n = lp.num_vars;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    std::vector<Rational> row(n);
    for (const auto& [j, v] : c.terms) row[j] = v;
    rows.push_back(row);
    rhs.push_back(c.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(n);
    row[j] = -1;
    rows.push_back(row);
    rhs.push_back(0);
  }
  const int total = static_cast<int>(rows.size());
  std::optional<Rational> best;
  std::vector<int> pick(n);
  auto consider = [&] {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i : pick) {
      a.push_back(rows[i]);
      b.push_back(rhs[i]);
    }
    auto x = gauss(a, b);
    if (!x) return;
    for (int i = 0; i < total; ++i) {
      Rational lhs;
      for (int j = 0; j < n; ++j) lhs += rows[i][j] * (*x)[j];
      if (lhs > rhs[i]) return;
    }
    Rational value;
    for (int j = 0; j < n; ++j) value += lp.objective[j] * (*x)[j];
    if (!best || value > *best) best = value;
  };
  if (n == 0) return Rational(0);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    consider();
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

/// Clone classes straight from the definition (quadratic scan).
inline std::vector<std::vector<int>> clones_by_definition(const Graph& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> placed(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u) {
    if (placed[u]) continue;
    std::vector<int> cls{u};
    for (int v = u + 1; v < g.order(); ++v) {
      if (placed[v] || g.adjacent(u, v)) continue;
      bool same = true;
      for (int w = 0; w < g.order() && same; ++w) {
        if (w != u && w != v) same = g.adjacent(u, w) == g.adjacent(v, w);
      }
      if (same) {
        cls.push_back(v);
        placed[v] = 1;
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

/// Random graph with clones planted by copying neighbourhoods.
inline Graph graph_with_clones(int n, cliquepack::SplitMix64& rng) {
  Graph base = cliquepack::random_gnp(n, cliquepack::make_rational(1, 2), rng);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : base.edges()) adj[u][v] = adj[v][u] = 1;
  if (n < 2) return base;
  const int copies = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
  for (int c = 0; c < copies; ++c) {
    const int src = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int dst = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (src == dst) continue;
    for (int w = 0; w < n; ++w) {
      if (w == dst) continue;
      const char bit = w == src ? 0 : adj[src][w];
      adj[dst][w] = adj[w][dst] = bit;
    }
  }
  std::vector<cliquepack::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace oracle
