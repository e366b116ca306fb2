// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliquepack/lab.hpp"
#include "cliquepack/multipartite.hpp"
#include "cliquepack/symmetrization.hpp"
#include "oracles.hpp"

using namespace cliquepack;

namespace {

// Wall-clock limits in seconds; arithmetic checks are exact.
constexpr double kLpExampleLimit = 1.0;
constexpr double kTheoremSweepLimit = 600.0;
constexpr double kConstructionLimit = 300.0;
constexpr double kSymmetrizationLimit = 600.0;
constexpr double kProfileBoundsLimit = 60.0;
constexpr double kExampleLimit = 60.0;
constexpr double kPhiLimit = 300.0;

constexpr int kGnpPerCell = 667;  // 5 orders x 3 densities x 667 >= 10^4
constexpr int kCloneGraphs = 500;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome exact_lp_values() {
  Outcome out;
  struct Case {
    const char* name;
    Graph g;
    Rational expected;
  };
  const std::vector<Case> cases{
      {"K4", complete_graph(4), Rational(2)},
      {"K222", complete_multipartite(MultipartiteProfile({2, 2, 2})), Rational(4)},
      {"C5", cycle_graph(5), Rational(0)},
      {"K5", complete_graph(5), make_rational(10, 3)},
  };
  double slowest = 0;
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto lp = packing_lp(c.g, enumerate_cliques(c.g, 3));
    const auto sol = solve(lp);
    std::string why;
    const bool certified = verify_certificate(lp, sol, &why);
    const auto result = nu_star(c.g, 3);
    const double took = seconds_since(start);
    slowest = std::max(slowest, took);
    if (!certified) out.fail(std::string(c.name) + ": certificate rejected (" + why + ")");
    if (sol.value != c.expected || result.value != c.expected) {
      out.fail(std::string(c.name) + ": got " + to_string(result.value) + ", want " + to_string(c.expected));
    }
    if (!verify_packing(c.g, result.packing).feasible) out.fail(std::string(c.name) + ": infeasible packing");
    if (took >= kLpExampleLimit) out.fail(std::string(c.name) + ": too slow");
  }
  if (out.ok) out.detail = "4 graphs certified, slowest " + std::to_string(slowest) + " s";
  return out;
}

Outcome theorem_sweep() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  long gnp = 0, profiles = 0;
  for (int r : {3, 4}) {
    for (const Rational& p : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
      ExperimentConfig config;
      config.seed = 20240 + static_cast<std::uint64_t>(r);
      config.family = Family::random_gnp;
      config.n_min = 4;
      config.n_max = 8;
      config.count = kGnpPerCell;
      config.p = p;
      config.r = r;
      for (const auto& row : run_sweep(config)) {
        ++gnp;
        if (!row.theorem_ok || !*row.theorem_ok) out.fail("violation at " + row.instance);
      }
    }
    ExperimentConfig config;
    config.family = Family::random_multipartite;
    config.exhaustive = true;
    config.n_min = 1;
    config.n_max = 12;
    config.r = r;
    for (const auto& row : run_sweep(config)) {
      ++profiles;
      if (!row.passed() || !row.theorem_ok || !*row.theorem_ok) out.fail("violation at " + row.instance);
    }
  }
  const double took = seconds_since(start);
  if (gnp / 2 < 10000) out.fail("only " + std::to_string(gnp / 2) + " random graphs per r");
  if (took >= kTheoremSweepLimit) out.fail("too slow: " + std::to_string(took) + " s");
  if (out.ok) {
    out.detail = std::to_string(gnp) + " G(n,p) runs and " + std::to_string(profiles) +
                 " profile runs, " + std::to_string(took) + " s";
  }
  return out;
}

Outcome constructive_packer() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  long checked = 0, against_lp = 0;
  for (int n = 1; n <= 30; ++n) {
    for (const auto& profile : all_profiles(n, 6)) {
      const Graph g = complete_multipartite(profile);
      for (int r : {3, 4, 5}) {
        const auto f = construct_packing(profile, r);
        const Rational bound = 2 * compute_scalars(profile, r).k_G / r;
        const auto check = verify_packing(g, f);
        if (!check.feasible) out.fail(profile.to_string() + " r=" + std::to_string(r) + ": " + check.message);
        if (f.value() < bound) out.fail(profile.to_string() + " r=" + std::to_string(r) + ": below 2k/r");
        if (n <= 14) {
          if (f.value() > nu_star(g, r).value) out.fail(profile.to_string() + ": above nu*");
          ++against_lp;
        }
        ++checked;
      }
    }
  }
  const double took = seconds_since(start);
  if (took >= kConstructionLimit) out.fail("too slow: " + std::to_string(took) + " s");
  if (out.ok) {
    out.detail = std::to_string(checked) + " constructions, " + std::to_string(against_lp) +
                 " compared with the LP, " + std::to_string(took) + " s";
  }
  return out;
}

std::vector<Graph> clone_instances() {
  std::vector<Graph> graphs;
  SplitMix64 rng(500);
  for (std::uint64_t i = 0; static_cast<int>(graphs.size()) < kCloneGraphs; ++i) {
    SplitMix64 child = rng.split(i);
    const int n = 2 + static_cast<int>(child.below(7));
    // Every third instance is plain G(n, 1/2); the rest have planted clones.
    Graph g = i % 3 == 0 ? random_gnp(n, make_rational(1, 2), child) : oracle::graph_with_clones(n, child);
    if (!eligible_class_pairs(g).empty()) graphs.push_back(std::move(g));
  }
  return graphs;
}

Outcome averaging_and_symmetrization(Outcome& symmetrize_out) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto graphs = clone_instances();
  long pairs = 0, steps = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const std::string tag = "graph " + std::to_string(i);
    for (const auto& [v0, v1] : eligible_class_pairs(g)) {
      const long s0 = static_cast<long>(v0.size()), s1 = static_cast<long>(v1.size());
      const Graph to_v0 = replace_neighborhood(g, v1, v0);
      const Graph to_v1 = replace_neighborhood(g, v0, v1);
      if ((s0 + s1) * g.edge_count() != s0 * to_v0.edge_count() + s1 * to_v1.edge_count()) {
        out.fail(tag + ": edge identity");
      }
      for (int r : {3, 4}) {
        const Rational c = make_rational(-2, r);
        if (h_value(g, r, c) < std::min(h_value(to_v0, r, c), h_value(to_v1, r, c))) {
          out.fail(tag + ": min-inequality at r=" + std::to_string(r));
        }
      }
      ++pairs;
    }
    for (int r : {3, 4}) {
      try {
        const auto trace = symmetrize(g, r);
        if (!trace.is_monotone()) symmetrize_out.fail(tag + ": h increased");
        for (const auto& s : trace.steps) {
          if (s.classes_after >= s.classes_before) symmetrize_out.fail(tag + ": class count did not drop");
          if (s.h_after > s.h_before) symmetrize_out.fail(tag + ": h increased");
        }
        if (multipartite_profile(trace.final_graph) != trace.profile) {
          symmetrize_out.fail(tag + ": final graph not complete multipartite");
        }
        steps += static_cast<long>(trace.steps.size());
      } catch (const Error& e) {
        symmetrize_out.fail(tag + ": " + e.what());
      }
    }
  }
  const double took = seconds_since(start);
  if (took >= kSymmetrizationLimit) {
    out.fail("too slow: " + std::to_string(took) + " s");
    symmetrize_out.fail("too slow");
  }
  if (out.ok) {
    out.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) + " eligible pairs, " +
                 std::to_string(took) + " s";
  }
  if (symmetrize_out.ok) {
    symmetrize_out.detail = std::to_string(2 * graphs.size()) + " traces, " + std::to_string(steps) + " steps";
  }
  return out;
}

Outcome profile_bounds() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  long checked = 0;
  for (int n = 1; n <= 20; ++n) {
    for (const auto& profile : all_profiles(n, n)) {
      for (int r : {3, 4, 5}) {
        const auto s = compute_scalars(profile, r);
        if (s.k_G > s.t_H) out.fail(profile.to_string() + ": k_G > t_H");
        if (2 * s.e_G < static_cast<long>(n) * (n - profile.part(0))) out.fail(profile.to_string() + ": edge bound");
        const auto chain = merge_to_largest(profile);
        for (std::size_t i = 1; i < chain.size(); ++i) {
          if (chain[i].edge_count() > chain[i - 1].edge_count()) out.fail(profile.to_string() + ": merge added edges");
        }
        ++checked;
      }
    }
  }
  const double took = seconds_since(start);
  if (took >= kProfileBoundsLimit) out.fail("too slow: " + std::to_string(took) + " s");
  if (out.ok) out.detail = std::to_string(checked) + " (profile, r) pairs, " + std::to_string(took) + " s";
  return out;
}

Outcome abc_example() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto small = concluding_example(12, 6);
  if (small.edges != 50) out.fail("e = " + std::to_string(small.edges));
  if (small.k_integral != 14 || small.k_formula != 14) out.fail("k != 14");
  if (!small.bc_edges_in_no_triangle) out.fail("a B-C edge lies in a triangle");

  const Rational eps = make_rational(1, 100);
  const Rational threshold = (1 + eps) * 6;
  int rows = 0, below = 0;
  for (int n : {1296, 1302}) {
    for (const auto& row : abc_sweep({n}, t_near_threshold(n, eps, 24), eps)) {
      if (!row.example || !row.below_threshold) {
        out.fail("n=" + std::to_string(n) + " t=" + std::to_string(row.t) + ": " + row.note);
        continue;
      }
      ++rows;
      if (*row.below_threshold) ++below;
      if (13 * Rational(row.t) >= threshold * n && !*row.below_threshold) {
        out.fail("n=" + std::to_string(n) + " t=" + std::to_string(row.t) + ": f(t) not below (1-eps/100)k");
      }
    }
  }
  if (below == 0) out.fail("no t in the sweep has f(t) < (1-eps/100)k");
  const double took = seconds_since(start);
  if (took >= kExampleLimit) out.fail("too slow: " + std::to_string(took) + " s");
  if (out.ok) {
    out.detail = "e=50 k=14 at (12,6); " + std::to_string(below) + "/" + std::to_string(rows) +
                 " sweep rows below threshold, " + std::to_string(took) + " s";
  }
  return out;
}

Outcome phi_values() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n <= 6; ++n) {
    const auto table = phi_table(n, 3);
    if (table.empty() || table.front().k != 0 || table.front().phi != 0) {
      out.fail("phi(" + std::to_string(n) + ", 0) != 0");
    }
    if (n == 4) {
      if (table.size() != 3 || table[1].phi != 1 || table[2].phi != 1) out.fail("phi(4, 1..2) != 1");
    }
  }
  const double took = seconds_since(start);
  if (took >= kPhiLimit) out.fail("too slow: " + std::to_string(took) + " s");
  if (out.ok) out.detail = "n <= 6 exhaustive, " + std::to_string(took) + " s";
  return out;
}

}  // namespace

int main() {
  bool all_ok = true;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] AC%d %s: %s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && o.ok;
  };
  auto guarded = [](const std::function<Outcome()>& body) {
    try {
      return body();
    } catch (const std::exception& e) {
      Outcome o;
      o.fail(std::string("exception: ") + e.what());
      return o;
    }
  };

  report(1, "exact LP values", guarded(exact_lp_values));
  report(2, "nu* >= 2k/r sweep", guarded(theorem_sweep));
  report(3, "constructive packer", guarded(constructive_packer));
  Outcome symmetrization;
  report(4, "averaging inequality and edge identity",
         guarded([&] { return averaging_and_symmetrization(symmetrization); }));
  if (symmetrization.ok && symmetrization.detail.empty()) symmetrization.fail("not run");
  report(5, "symmetrization terminates", symmetrization);
  report(6, "profile inequalities", guarded(profile_bounds));
  report(7, "A/B/C example", guarded(abc_example));
  report(8, "phi table", guarded(phi_values));
  return all_ok ? 0 : 1;
}
