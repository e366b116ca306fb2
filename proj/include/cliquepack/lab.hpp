#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cliquepack/graph.hpp"
#include "cliquepack/multipartite.hpp"
#include "cliquepack/packing.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

/// SplitMix64. Child streams are derived from (state, key) so sweeps do not
/// depend on generation order.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [0, bound), unbiased.
  std::uint64_t below(std::uint64_t bound);
  /// Independent stream for child `key`.
  SplitMix64 split(std::uint64_t key) const;

private:
  std::uint64_t state_;
};

/// G(n, p) with rational p = a/b; each edge independently with probability p.
Graph random_gnp(int n, const Rational& p, SplitMix64& rng);
/// Assigns each vertex to one of a random number of parts; empty parts dropped.
MultipartiteProfile random_profile(int n, SplitMix64& rng);
/// T_{r-1}(n) plus `extra` distinct random edges inside its parts.
Graph turan_plus_edges(int n, int r, int extra, SplitMix64& rng);

enum class Family { random_gnp, random_multipartite, turan_plus_edges, example_abc };

Family parse_family(const std::string& name);
std::string to_string(Family f);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  Family family = Family::random_gnp;
  int n_min = 4;
  int n_max = 8;
  int count = 10;          ///< instances per n (ignored by exhaustive families)
  Rational p = make_rational(1, 2);
  int r = 3;
  int extra_edges = 1;     ///< turan-plus-edges
  bool exhaustive = false; ///< random-multipartite: every profile instead of samples
  int max_parts = 0;       ///< exhaustive profiles: cap on part count, 0 = none
  bool with_nu = false;    ///< also run branch and bound for nu_r
  bool with_nu_star = true;
  bool timing = false;     ///< fill wall_ms; off keeps output byte-reproducible
  int jobs = 1;
  SolverBudgets budgets;
};

struct Instance {
  std::string descriptor;
  Graph graph;
  std::optional<MultipartiteProfile> profile;
};

/// Deterministic in the config; n ranges with n_min > n_max yield nothing.
std::vector<Instance> generate_instances(const ExperimentConfig& config);

struct ResultRow {
  std::string instance;
  int n = 0;
  long e = 0;
  int r = 0;
  Rational k;
  Rational bound;  ///< 2k / r
  std::optional<Rational> nu_star;
  std::optional<int> nu_integral;
  std::optional<Rational> constructed;
  std::optional<bool> theorem_ok;       ///< nu_star >= 2k/r
  std::optional<bool> construction_ok;  ///< 2k/r <= constructed <= nu_star, feasible
  std::optional<bool> integral_ok;      ///< nu_integral <= nu_star
  std::string status = "ok";
  std::optional<double> wall_ms;

  /// False iff some present check failed.
  bool passed() const;
};

ResultRow evaluate_instance(const Instance& instance, const ExperimentConfig& config);

/// Evaluates every instance on `config.jobs` workers; rows keep instance order.
std::vector<ResultRow> run_sweep(const ExperimentConfig& config);

/// Fixed column order; new columns are only ever appended.
extern const char* const kResultColumns;
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct PhiRow {
  long edges = 0;
  long k = 0;    ///< edges - t_{r-1}(n)
  int phi = 0;   ///< min nu_r over n-vertex graphs with this many edges
  long graphs = 0;
};

/// Exhaustive over all labelled graphs on n vertices (Gray-code order).
/// Throws PreconditionError when n exceeds `max_n`.
std::vector<PhiRow> phi_table(int n, int r, int max_n = 7);

/// nu_r of a graph with at most 8 vertices via edge bitmasks; stops early once
/// a packing of size `cap` is found (returns min(nu_r, cap)).
int small_nu(const Graph& g, int r, int cap = 1 << 30);

struct AbcRow {
  int n = 0;
  int t = 0;
  std::optional<AbcExample> example;
  std::string note;  ///< reason when the pair is not realizable
  std::optional<bool> below_threshold;  ///< f(t) < (1 - eps/100) k, when eps given
};

/// t values that are multiples of 6 within `radius` of (1 + eps) 6n/13.
std::vector<int> t_near_threshold(int n, const Rational& eps, int radius);
std::vector<AbcRow> abc_sweep(const std::vector<int>& ns, const std::vector<int>& ts,
                              const std::optional<Rational>& eps);
void write_abc_csv(std::ostream& out, const std::vector<AbcRow>& rows);

}  // namespace cliquepack
