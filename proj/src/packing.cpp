#include "cliquepack/packing.hpp"

#include <algorithm>

namespace cliquepack {

Rational FractionalPacking::value() const {
  Rational total;
  for (const auto& [clique, w] : weights) total += w;
  return total;
}

void FractionalPacking::add(const Clique& clique, const Rational& w) {
  if (sgn(w) == 0) return;
  auto [it, inserted] = weights.try_emplace(clique, w);
  if (!inserted) {
    it->second += w;
    if (sgn(it->second) == 0) weights.erase(it);
  }
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace {

/// Dense (u, v) -> edge row lookup, -1 for non-edges.
class EdgeIndex {
public:
  explicit EdgeIndex(const Graph& g) : n_(g.order()), ids_(static_cast<std::size_t>(n_) * n_, -1) {
    int next = 0;
    for (auto [u, v] : g.edges()) {
      ids_[index(u, v)] = next;
      ids_[index(v, u)] = next;
      ++next;
    }
  }
  int operator()(Vertex u, Vertex v) const { return ids_[index(u, v)]; }

private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int n_;
  std::vector<int> ids_;
};

std::vector<std::vector<int>> clique_edge_ids(const EdgeIndex& index, std::span<const Clique> cliques) {
  std::vector<std::vector<int>> out;
  out.reserve(cliques.size());
  for (const auto& q : cliques) {
    std::vector<int> ids;
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = a + 1; b < q.size(); ++b) ids.push_back(index(q[a], q[b]));
    }
    out.push_back(std::move(ids));
  }
  return out;
}

mpz_class floor_of(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

LinearProgram packing_lp(const Graph& g, std::span<const Clique> cliques) {
  const EdgeIndex index(g);
  LinearProgram lp;
  lp.num_vars = static_cast<int>(cliques.size());
  lp.objective.assign(cliques.size(), Rational(1));
  lp.constraints.resize(static_cast<std::size_t>(g.edge_count()));
  for (auto& row : lp.constraints) row.rhs = 1;
  const auto ids = clique_edge_ids(index, cliques);
  for (std::size_t j = 0; j < ids.size(); ++j) {
    for (int e : ids[j]) {
      if (e < 0) throw PreconditionError("packing_lp: listed set is not a clique of g");
      lp.constraints[e].terms.emplace_back(static_cast<int>(j), Rational(1));
    }
  }
  return lp;
}

NuStarResult nu_star(const Graph& g, int r, const SolverBudgets& budgets) {
  if (r < 2) throw PreconditionError("nu_star requires r >= 2");
  NuStarResult out;
  out.packing.r = r;
  const auto cliques = enumerate_cliques(g, r);
  out.clique_count = cliques.size();
  if (cliques.empty()) return out;
  if (static_cast<long>(cliques.size()) > budgets.lp_max_cliques) {
    throw BudgetExceeded("packing LP has " + std::to_string(cliques.size()) + " " +
                         std::to_string(r) + "-cliques, over the limit of " +
                         std::to_string(budgets.lp_max_cliques));
  }
  const auto lp = packing_lp(g, cliques);
  out.certificate = solve(lp, budgets.lp_options());
  std::string why;
  if (!verify_certificate(lp, out.certificate, &why)) {
    throw InvariantViolation("packing LP certificate rejected: " + why);
  }
  out.value = out.certificate.value;
  if (out.value * binomial(r, 2) > g.edge_count()) {
    throw InvariantViolation("nu_star exceeds e(G)/binom(r,2)");
  }
  for (std::size_t j = 0; j < cliques.size(); ++j) out.packing.add(cliques[j], out.certificate.primal[j]);
  return out;
}

namespace {

class PackingSearch {
public:
  PackingSearch(const Graph& g, int r, const SolverBudgets& budgets)
      : cliques_(enumerate_cliques(g, r)),
        per_clique_(binomial(r, 2)),
        node_budget_(budgets.bb_node_budget) {
    const EdgeIndex index(g);
    edges_of_ = clique_edge_ids(index, cliques_);
    used_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    stamp_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    upper_ = g.edge_count() / per_clique_;
    if (!cliques_.empty() && static_cast<long>(cliques_.size()) <= budgets.lp_max_cliques) {
      try {
        const auto lp_bound = floor_of(nu_star(g, r, budgets).value);
        upper_ = std::min(upper_, lp_bound.get_si());
      } catch (const BudgetExceeded&) {
        // fall back to the edge-count bound
      }
    }
  }

  IntegralPacking run() {
    greedy();
    try {
      if (best_.size() < static_cast<std::size_t>(upper_)) dfs(0);
    } catch (const BudgetExceeded&) {
      throw IntegralBudgetExceeded(
          "branch-and-bound node budget of " + std::to_string(node_budget_) +
              " exhausted; best lower bound " + std::to_string(best_.size()),
          result());
    }
    return result();
  }

private:
  bool compatible(std::size_t i) const {
    return std::none_of(edges_of_[i].begin(), edges_of_[i].end(), [&](int e) { return used_[e]; });
  }

  void set_used(std::size_t i, char flag) {
    for (int e : edges_of_[i]) used_[e] = flag;
  }

  void greedy() {
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
      if (compatible(i)) {
        set_used(i, 1);
        chosen_.push_back(i);
      }
    }
    best_ = chosen_;
    for (auto i : chosen_) set_used(i, 0);
    chosen_.clear();
  }

  // Returns true once the incumbent meets the root upper bound.
  bool dfs(std::size_t start) {
    if (++nodes_ > node_budget_) throw BudgetExceeded("nodes");
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (best_.size() >= static_cast<std::size_t>(upper_)) return true;

    ++epoch_;
    long compatible_count = 0, free_edges = 0;
    std::size_t first = cliques_.size();
    for (std::size_t i = start; i < cliques_.size(); ++i) {
      if (!compatible(i)) continue;
      if (first == cliques_.size()) first = i;
      ++compatible_count;
      for (int e : edges_of_[i]) {
        if (stamp_[e] != epoch_) {
          stamp_[e] = epoch_;
          ++free_edges;
        }
      }
    }
    const long bound = static_cast<long>(chosen_.size()) + std::min(compatible_count, free_edges / per_clique_);
    if (bound <= static_cast<long>(best_.size())) return false;

    set_used(first, 1);
    chosen_.push_back(first);
    const bool done = dfs(first + 1);
    chosen_.pop_back();
    set_used(first, 0);
    if (done) return true;
    return dfs(first + 1);
  }

  IntegralPacking result() const {
    IntegralPacking out;
    out.value = static_cast<int>(best_.size());
    for (auto i : best_) out.cliques.push_back(cliques_[i]);
    out.nodes = nodes_;
    return out;
  }

  std::vector<Clique> cliques_;
  std::vector<std::vector<int>> edges_of_;
  long per_clique_;
  long node_budget_;
  long upper_ = 0;
  long nodes_ = 0;
  long epoch_ = 0;
  std::vector<char> used_;
  std::vector<long> stamp_;
  std::vector<std::size_t> chosen_, best_;
};

}  // namespace

IntegralPacking nu_integral(const Graph& g, int r, const SolverBudgets& budgets) {
  if (r < 2) throw PreconditionError("nu_integral requires r >= 2");
  return PackingSearch(g, r, budgets).run();
}

std::map<Edge, Rational> edge_loads(const FractionalPacking& p) {
  std::map<Edge, Rational> loads;
  for (const auto& [q, w] : p.weights) {
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = a + 1; b < q.size(); ++b) loads[{q[a], q[b]}] += w;
    }
  }
  return loads;
}

PackingCheck verify_packing(const Graph& g, const FractionalPacking& p) {
  PackingCheck out;
  auto clique_string = [](const Clique& q) {
    std::string s = "{";
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
    return s + "}";
  };
  for (const auto& [q, w] : p.weights) {
    std::string problem;
    if (static_cast<int>(q.size()) != p.r) {
      problem = "has " + std::to_string(q.size()) + " vertices, expected " + std::to_string(p.r);
    } else if (!std::is_sorted(q.begin(), q.end()) ||
               std::adjacent_find(q.begin(), q.end()) != q.end()) {
      problem = "is not strictly increasing";
    } else if (q.front() < 0 || q.back() >= g.order()) {
      problem = "has a vertex out of range";
    } else if (!g.is_clique(q)) {
      problem = "is not a clique";
    } else if (sgn(w) < 0) {
      problem = "has negative weight " + to_string(w);
    }
    if (!problem.empty()) {
      out.feasible = false;
      out.clique = q;
      out.message = "clique " + clique_string(q) + " " + problem;
      return out;
    }
  }
  for (const auto& [edge, load] : edge_loads(p)) {
    if (load > out.max_load) out.max_load = load;
    if (load > 1 && out.feasible) {
      out.feasible = false;
      out.edge = edge;
      out.load = load;
      out.message = "edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                    " carries load " + to_string(load);
    }
  }
  return out;
}

Rational continuous_surplus(long n, long edges, int r) {
  if (r < 3) throw PreconditionError("surplus requires r >= 3");
  const Rational density = make_rational(r - 2, 2L * (r - 1));
  return Rational(edges) - density * Rational(n * n);
}

long integral_surplus(const Graph& g, int r) {
  return g.edge_count() - turan_edge_count(g.order(), r - 1);
}

TheoremReport check_main_theorem(const Graph& g, int r, const SolverBudgets& budgets) {
  if (r < 3) throw PreconditionError("check_main_theorem requires r >= 3");
  TheoremReport report;
  report.n = g.order();
  report.r = r;
  report.edges = g.edge_count();
  report.k = continuous_surplus(g.order(), g.edge_count(), r);
  report.nu_star = nu_star(g, r, budgets).value;
  report.bound = 2 * report.k / r;
  report.satisfied = report.nu_star >= report.bound;
  return report;
}

}  // namespace cliquepack
