#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquepack/exact_lp.hpp"
#include "cliquepack/graph.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

/// Nonnegative weights on r-cliques with total load at most 1 on every edge.
struct FractionalPacking {
  int r = 0;
  std::map<Clique, Rational> weights;

  /// Sum of all weights.
  Rational value() const;
  /// Adds `w` to the weight of `clique`, dropping entries that reach zero.
  void add(const Clique& clique, const Rational& w);

  friend bool operator==(const FractionalPacking&, const FractionalPacking&) = default;
};

struct SolverBudgets {
  long lp_pivot_budget = 200'000;
  /// Largest clique count for which the packing LP is attempted.
  long lp_max_cliques = 5'000;
  long bb_node_budget = 1'000'000;

  LpOptions lp_options() const { return LpOptions{lp_pivot_budget}; }
};

/// The packing LP: one variable per r-clique (in `cliques` order), one row per
/// edge of g in lexicographic order.
LinearProgram packing_lp(const Graph& g, std::span<const Clique> cliques);

struct NuStarResult {
  Rational value;
  FractionalPacking packing;
  LpSolution certificate;  ///< empty when g has no r-clique
  std::size_t clique_count = 0;
};

/// Exact fractional r-clique packing number. Throws BudgetExceeded when the
/// clique count exceeds `lp_max_cliques` or the pivot budget runs out.
/// Every solve is checked against its duality certificate and against
/// e(g) / binom(r, 2); a failure throws InvariantViolation.
NuStarResult nu_star(const Graph& g, int r, const SolverBudgets& budgets = {});

struct IntegralPacking {
  int value = 0;
  std::vector<Clique> cliques;
  long nodes = 0;
};

/// Thrown by nu_integral when the node budget runs out. Carries the best
/// packing found so far, which is a lower bound only.
class IntegralBudgetExceeded : public BudgetExceeded {
public:
  IntegralBudgetExceeded(const std::string& what, IntegralPacking best)
      : BudgetExceeded(what), best_(std::move(best)) {}
  const IntegralPacking& best() const { return best_; }

private:
  IntegralPacking best_;
};

/// Maximum number of pairwise edge-disjoint r-cliques, by branch and bound.
IntegralPacking nu_integral(const Graph& g, int r, const SolverBudgets& budgets = {});

struct PackingCheck {
  bool feasible = true;
  std::string message;            ///< empty when feasible
  std::optional<Clique> clique;   ///< first invalid clique, if any
  std::optional<Edge> edge;       ///< first overloaded edge, if any
  Rational load;                  ///< load on `edge`
  Rational max_load;              ///< largest edge load seen

  explicit operator bool() const { return feasible; }
};

/// Checks that every keyed clique is an r-clique of g with positive weight and
/// that every edge carries load at most 1. Exact.
PackingCheck verify_packing(const Graph& g, const FractionalPacking& p);

/// Per-edge load of a packing, keyed by edge.
std::map<Edge, Rational> edge_loads(const FractionalPacking& p);

/// k with e = (1 - 1/(r-1)) n^2 / 2 + k.
Rational continuous_surplus(long n, long edges, int r);
/// e - t_{r-1}(n).
long integral_surplus(const Graph& g, int r);

struct TheoremReport {
  int n = 0;
  int r = 0;
  long edges = 0;
  Rational k;
  Rational nu_star;
  Rational bound;  ///< 2k / r
  bool satisfied = false;
};

/// Evaluates nu*_r(g) >= 2k/r exactly. Requires r >= 3.
TheoremReport check_main_theorem(const Graph& g, int r, const SolverBudgets& budgets = {});

long binomial(int n, int k);

}  // namespace cliquepack
