#include "cliquepack/symmetrization.hpp"

#include <algorithm>

namespace cliquepack {

namespace {

void require_clone_set(const Graph& g, std::span<const Vertex> set, const char* name) {
  if (set.empty()) throw PreconditionError(std::string(name) + " is empty");
  for (Vertex v : set) {
    if (v < 0 || v >= g.order()) throw PreconditionError(std::string(name) + " has a vertex out of range");
  }
  for (Vertex v : set) {
    if (g.adjacent(set.front(), v) || g.neighbors(v) != g.neighbors(set.front())) {
      throw PreconditionError(std::string(name) + " is not a set of pairwise clones");
    }
  }
}

std::vector<Vertex> sorted_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph replace_neighborhood(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
  require_clone_set(g, from, "source set");
  require_clone_set(g, to, "target set");
  const auto merged = sorted_union(from, to);
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) {
    throw PreconditionError("source and target sets intersect");
  }
  if (g.neighbors(from.front()).contains(to.front())) {
    throw PreconditionError("source and target sets are joined by an edge");
  }

  VertexSet touched(g.order());
  for (Vertex v : merged) touched.insert(v);
  const VertexSet& target_nbrs = g.neighbors(to.front());

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (!touched.contains(u) && !touched.contains(v)) edges.emplace_back(u, v);
  }
  for (Vertex x : merged) {
    for (Vertex y = target_nbrs.first(); y >= 0; y = target_nbrs.next(y)) {
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  return Graph(g.order(), edges);
}

Rational h_value(const Graph& g, int r, const Rational& c, const SolverBudgets& budgets) {
  if (r < 3) throw PreconditionError("h_value requires r >= 3");
  return nu_star(g, r, budgets).value + c * Rational(g.edge_count());
}

FractionalPacking average_packings(const Graph& g, std::span<const Vertex> v0,
                                   std::span<const Vertex> v1, const FractionalPacking& f0,
                                   const FractionalPacking& f1) {
  if (f0.r != f1.r) throw PreconditionError("packings have different clique orders");
  const Graph g0 = replace_neighborhood(g, v1, v0);
  const Graph g1 = replace_neighborhood(g, v0, v1);
  if (auto check = verify_packing(g0, f0); !check) {
    throw PreconditionError("f0 is not a packing of G[V1->V0]: " + check.message);
  }
  if (auto check = verify_packing(g1, f1); !check) {
    throw PreconditionError("f1 is not a packing of G[V0->V1]: " + check.message);
  }

  const auto merged = sorted_union(v0, v1);
  const Rational merged_size(static_cast<long>(merged.size()));
  const std::span<const Vertex> sides[2] = {v0, v1};
  const FractionalPacking* inputs[2] = {&f0, &f1};

  FractionalPacking out;
  out.r = f0.r;
  for (int i = 0; i < 2; ++i) {
    const Rational share = Rational(static_cast<long>(sides[i].size())) / merged_size;
    // Cliques through the merged class, keyed by their remaining vertices and
    // averaged over the class (its vertices are interchangeable clones).
    std::map<Clique, Rational> through;
    for (const auto& [q, w] : inputs[i]->weights) {
      auto hit = std::find_if(q.begin(), q.end(), [&](Vertex v) {
        return std::binary_search(merged.begin(), merged.end(), v);
      });
      if (hit == q.end()) {
        out.add(q, share * w);
      } else {
        Clique rest(q.begin(), hit);
        rest.insert(rest.end(), hit + 1, q.end());
        through[rest] += w;
      }
    }
    for (const auto& [rest, total] : through) {
      const Rational uniform = total / merged_size;
      for (Vertex v : sides[i]) {
        Clique q = rest;
        q.insert(std::upper_bound(q.begin(), q.end(), v), v);
        out.add(q, uniform);
      }
    }
  }
  if (auto check = verify_packing(g, out); !check) {
    throw InvariantViolation("averaged packing is infeasible: " + check.message);
  }
  return out;
}

std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> eligible_class_pairs(const Graph& g) {
  const auto classes = clone_classes(g);
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      // Clone classes are uniform, so one representative pair decides adjacency.
      if (!g.adjacent(classes[i].front(), classes[j].front())) out.emplace_back(classes[i], classes[j]);
    }
  }
  return out;
}

const char* to_string(Direction d) { return d == Direction::a_to_b ? "a_to_b" : "b_to_a"; }

bool SymmetrizationTrace::is_monotone() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].h_after > steps[i].h_before) return false;
    if (i > 0 && steps[i].h_before != steps[i - 1].h_after) return false;
  }
  return true;
}

SymmetrizationTrace symmetrize(const Graph& g, int r, const SolverBudgets& budgets) {
  if (r < 3) throw PreconditionError("symmetrize requires r >= 3");
  const Rational c = make_rational(-2, r);
  SymmetrizationTrace trace;
  trace.r = r;
  trace.initial = g;
  Graph current = g;
  Rational h_current = h_value(current, r, c, budgets);

  while (true) {
    const auto pairs = eligible_class_pairs(current);
    if (pairs.empty()) break;
    const auto& [a, b] = pairs.front();

    SymmetrizationStep step;
    step.class_a = a;
    step.class_b = b;
    step.h_before = h_current;
    step.e_before = current.edge_count();
    step.classes_before = static_cast<int>(clone_classes(current).size());

    Graph keep_a = replace_neighborhood(current, b, a);
    Graph keep_b = replace_neighborhood(current, a, b);
    const Rational h_keep_a = h_value(keep_a, r, c, budgets);
    const Rational h_keep_b = h_value(keep_b, r, c, budgets);
    if (h_keep_b < h_keep_a) {
      step.direction = Direction::b_to_a;
      step.h_after = h_keep_b;
      current = std::move(keep_b);
    } else {
      step.direction = Direction::a_to_b;
      step.h_after = h_keep_a;
      current = std::move(keep_a);
    }
    step.e_after = current.edge_count();
    step.classes_after = static_cast<int>(clone_classes(current).size());
    if (step.classes_after >= step.classes_before) {
      throw InvariantViolation("clone class count did not decrease");
    }
    h_current = step.h_after;
    trace.steps.push_back(std::move(step));
  }

  auto profile = multipartite_profile(current);
  if (!profile && current.order() > 0) {
    throw InvariantViolation("symmetrization ended on a graph that is not complete multipartite");
  }
  if (profile) trace.profile = *profile;
  trace.final_graph = std::move(current);
  return trace;
}

}  // namespace cliquepack
