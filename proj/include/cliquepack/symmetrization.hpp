#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cliquepack/graph.hpp"
#include "cliquepack/packing.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

/// G[from -> to]: every vertex of from ∪ to receives the neighbourhood of a
/// representative of `to`. Edges avoiding from ∪ to are kept.
///
/// Both sets must be nonempty, disjoint, consist of pairwise clones, and have
/// no edge between them; violations throw PreconditionError.
Graph replace_neighborhood(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to);

/// nu*_r(g) + c * e(g).
Rational h_value(const Graph& g, int r, const Rational& c, const SolverBudgets& budgets = {});

/// Combines a packing f0 of G[v1 -> v0] and a packing f1 of G[v0 -> v1] into a
/// packing of g of value (|v0| |f0| + |v1| |f1|) / (|v0| + |v1|). Weights of
/// cliques through v0 ∪ v1 are first averaged over that clone class.
FractionalPacking average_packings(const Graph& g, std::span<const Vertex> v0,
                                   std::span<const Vertex> v1, const FractionalPacking& f0,
                                   const FractionalPacking& f1);

/// Pairs of clone classes whose union is independent, in lexicographic order
/// of (smallest vertex of first class, smallest vertex of second class).
std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> eligible_class_pairs(const Graph& g);

enum class Direction {
  a_to_b,  ///< class_a's neighbourhood is copied onto class_b (G[b -> a])
  b_to_a,  ///< class_b's neighbourhood is copied onto class_a (G[a -> b])
};

const char* to_string(Direction d);

struct SymmetrizationStep {
  std::vector<Vertex> class_a;
  std::vector<Vertex> class_b;
  Direction direction = Direction::a_to_b;
  Rational h_before;
  Rational h_after;
  long e_before = 0;
  long e_after = 0;
  int classes_before = 0;
  int classes_after = 0;
};

struct SymmetrizationTrace {
  int r = 0;
  Graph initial;
  std::vector<SymmetrizationStep> steps;
  Graph final_graph;
  MultipartiteProfile profile;

  /// h_{r,-2/r} never increases along the trace.
  bool is_monotone() const;
};

/// Merges clone classes with h_{r,-2/r} until the graph is complete
/// multipartite. Requires r >= 3.
SymmetrizationTrace symmetrize(const Graph& g, int r, const SolverBudgets& budgets = {});

}  // namespace cliquepack
