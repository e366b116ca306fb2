#include "cliquepack/lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "cliquepack/exact_lp.hpp"

namespace cliquepack {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

SplitMix64 SplitMix64::split(std::uint64_t key) const {
  SplitMix64 mixer(state_ ^ (key * 0xd1b54a32d192ed03ULL));
  return SplitMix64(mixer.next());
}

Graph random_gnp(int n, const Rational& p, SplitMix64& rng) {
  if (sgn(p) < 0 || p > 1) throw PreconditionError("edge probability must lie in [0, 1]");
  if (!p.get_den().fits_ulong_p()) throw PreconditionError("edge probability denominator too large");
  const std::uint64_t den = p.get_den().get_ui();
  const std::uint64_t num = p.get_num().get_ui();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.below(den) < num) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

MultipartiteProfile random_profile(int n, SplitMix64& rng) {
  if (n <= 0) throw PreconditionError("random_profile needs n >= 1");
  const auto parts = 1 + rng.below(static_cast<std::uint64_t>(n));
  std::vector<int> sizes(parts, 0);
  for (int v = 0; v < n; ++v) ++sizes[rng.below(parts)];
  std::erase(sizes, 0);
  return MultipartiteProfile(std::move(sizes));
}

Graph turan_plus_edges(int n, int r, int extra, SplitMix64& rng) {
  const MultipartiteProfile profile = turan_profile(n, r - 1);
  std::vector<Edge> edges = complete_multipartite(profile).edges();
  std::vector<Edge> missing;
  int offset = 0;
  for (int p : profile.parts()) {
    for (Vertex u = offset; u < offset + p; ++u) {
      for (Vertex v = u + 1; v < offset + p; ++v) missing.emplace_back(u, v);
    }
    offset += p;
  }
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(std::max(extra, 0)), missing.size());
  for (std::size_t i = 0; i < take; ++i) {
    const auto j = i + rng.below(missing.size() - i);
    std::swap(missing[i], missing[j]);
    edges.push_back(missing[i]);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

Family parse_family(const std::string& name) {
  if (name == "random-gnp") return Family::random_gnp;
  if (name == "random-multipartite") return Family::random_multipartite;
  if (name == "turan-plus-edges") return Family::turan_plus_edges;
  if (name == "example-abc") return Family::example_abc;
  throw ParseError("unknown instance family '" + name + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::random_gnp: return "random-gnp";
    case Family::random_multipartite: return "random-multipartite";
    case Family::turan_plus_edges: return "turan-plus-edges";
    case Family::example_abc: return "example-abc";
  }
  return "unknown";
}

namespace {

std::string profile_tag(const MultipartiteProfile& p) {
  std::string out = "multipartite:";
  for (int i = 0; i < p.part_count(); ++i) out += (i ? "-" : "") + std::to_string(p.part(i));
  return out;
}

}  // namespace

std::vector<Instance> generate_instances(const ExperimentConfig& config) {
  std::vector<Instance> out;
  const SplitMix64 root(config.seed);
  for (int n = std::max(config.n_min, 0); n <= config.n_max; ++n) {
    const SplitMix64 per_n = root.split(static_cast<std::uint64_t>(n));
    switch (config.family) {
      case Family::random_gnp:
        for (int i = 0; i < config.count; ++i) {
          SplitMix64 rng = per_n.split(static_cast<std::uint64_t>(i));
          out.push_back({"gnp:n=" + std::to_string(n) + ":p=" + to_string(config.p) +
                             ":i=" + std::to_string(i),
                         random_gnp(n, config.p, rng), std::nullopt});
        }
        break;
      case Family::random_multipartite:
        if (n == 0) break;
        if (config.exhaustive) {
          for (auto& p : all_profiles(n, config.max_parts > 0 ? config.max_parts : n)) {
            out.push_back({profile_tag(p), complete_multipartite(p), p});
          }
        } else {
          for (int i = 0; i < config.count; ++i) {
            SplitMix64 rng = per_n.split(static_cast<std::uint64_t>(i));
            auto p = random_profile(n, rng);
            out.push_back({profile_tag(p) + ":i=" + std::to_string(i), complete_multipartite(p), p});
          }
        }
        break;
      case Family::turan_plus_edges:
        for (int i = 0; i < config.count; ++i) {
          SplitMix64 rng = per_n.split(static_cast<std::uint64_t>(i));
          out.push_back({"turan+:n=" + std::to_string(n) + ":extra=" +
                             std::to_string(config.extra_edges) + ":i=" + std::to_string(i),
                         turan_plus_edges(n, config.r, config.extra_edges, rng), std::nullopt});
        }
        break;
      case Family::example_abc:
        if (n == 0 || n % 6 != 0) break;
        for (int t = 0; 5 * t <= 3 * n; t += 6) {
          out.push_back({"abc:n=" + std::to_string(n) + ":t=" + std::to_string(t), abc_graph(n, t),
                         std::nullopt});
        }
        break;
    }
  }
  return out;
}

bool ResultRow::passed() const {
  for (const auto& flag : {theorem_ok, construction_ok, integral_ok}) {
    if (flag && !*flag) return false;
  }
  return status.rfind("violation", 0) != 0;
}

ResultRow evaluate_instance(const Instance& instance, const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = instance.graph;
  ResultRow row;
  row.instance = instance.descriptor;
  row.n = g.order();
  row.e = g.edge_count();
  row.r = config.r;
  row.k = continuous_surplus(g.order(), g.edge_count(), config.r);
  row.bound = 2 * row.k / config.r;

  std::vector<std::string> notes;
  try {
    if (config.with_nu_star) {
      try {
        row.nu_star = nu_star(g, config.r, config.budgets).value;
        row.theorem_ok = *row.nu_star >= row.bound;
      } catch (const BudgetExceeded& e) {
        notes.push_back(std::string("budget: ") + e.what());
      }
    }
    if (instance.profile) {
      const auto built = construct_typed_packing(*instance.profile, config.r);
      row.constructed = built.value;
      bool ok = built.value >= row.bound;
      for (const auto& [pair, load] : built.packing.part_loads(*instance.profile)) {
        ok = ok && load <= 1;
      }
      if (row.nu_star) ok = ok && built.value <= *row.nu_star;
      row.construction_ok = ok;
    }
    if (config.with_nu) {
      try {
        row.nu_integral = nu_integral(g, config.r, config.budgets).value;
        if (row.nu_star) row.integral_ok = Rational(*row.nu_integral) <= *row.nu_star;
      } catch (const IntegralBudgetExceeded& e) {
        notes.push_back("budget: nu lower bound " + std::to_string(e.best().value));
      }
    }
  } catch (const InvariantViolation& e) {
    notes.push_back(std::string("violation: ") + e.what());
  }
  if (!notes.empty()) {
    row.status.clear();
    for (std::size_t i = 0; i < notes.size(); ++i) row.status += (i ? "; " : "") + notes[i];
  }
  if (config.timing) {
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config) {
  const auto instances = generate_instances(config);
  std::vector<ResultRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        rows[i] = evaluate_instance(instances[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, config.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

const char* const kResultColumns =
    "instance,n,e,r,k,bound_2k_over_r,nu_star,nu_integral,constructed_value,"
    "theorem_ok,construction_ok,integral_ok,status,wall_ms";

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultColumns << '\n';
  for (const auto& row : rows) {
    out << csv_field(row.instance) << ',' << row.n << ',' << row.e << ',' << row.r << ','
        << to_string(row.k) << ',' << to_string(row.bound) << ','
        << (row.nu_star ? to_string(*row.nu_star) : "") << ','
        << (row.nu_integral ? std::to_string(*row.nu_integral) : "") << ','
        << (row.constructed ? to_string(*row.constructed) : "") << ',' << opt_bool(row.theorem_ok)
        << ',' << opt_bool(row.construction_ok) << ',' << opt_bool(row.integral_ok) << ','
        << csv_field(row.status) << ',';
    if (row.wall_ms) out << *row.wall_ms;
    out << '\n';
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kSmallMaxN = 8;

// Edge-slot bitmask search for graphs with at most 8 vertices.
class SmallPacker {
public:
  SmallPacker(int n, int r) : n_(n), r_(r), per_(static_cast<int>(binomial(r, 2))) {
    int next = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slot_[u][v] = slot_[v][u] = next++;
    }
  }

  int solve(const std::uint16_t* adj, int cap) {
    cliques_.clear();
    if (r_ <= n_) collect(adj, 0, 0, 0, 0);
    best_ = 0;
    cap_ = cap;
    if (cap_ > 0) dfs(0, 0, 0);
    return best_;
  }

private:
  void collect(const std::uint16_t* adj, std::uint32_t candidates_init, int depth, int start,
               std::uint32_t edges) {
    // members_ holds the current clique; candidates are vertices >= start
    // adjacent to every member.
    if (depth == r_ || depth >= kSmallMaxN) {
      cliques_.push_back(edges);
      return;
    }
    for (int v = start; v < n_; ++v) {
      if (depth > 0 && !((candidates_init >> v) & 1U)) continue;
      std::uint32_t added = edges;
      for (int i = 0; i < depth; ++i) added |= std::uint32_t{1} << slot_[members_[i]][v];
      members_[depth] = v;
      const std::uint32_t next_candidates = depth == 0 ? adj[v] : (candidates_init & adj[v]);
      collect(adj, next_candidates, depth + 1, v + 1, added);
    }
  }

  void dfs(std::size_t start, std::uint32_t used, int count) {
    if (count > best_) best_ = count;
    if (best_ >= cap_) return;
    std::uint32_t available = 0;
    int compatible = 0;
    std::size_t first = cliques_.size();
    for (std::size_t i = start; i < cliques_.size(); ++i) {
      if (cliques_[i] & used) continue;
      if (first == cliques_.size()) first = i;
      available |= cliques_[i];
      ++compatible;
    }
    if (count + std::min(compatible, std::popcount(available) / per_) <= best_) return;
    dfs(first + 1, used | cliques_[first], count + 1);
    if (best_ >= cap_) return;
    dfs(first + 1, used, count);
  }

  int n_, r_, per_;
  int slot_[kSmallMaxN][kSmallMaxN] = {};
  int members_[kSmallMaxN] = {};
  std::vector<std::uint32_t> cliques_;
  int best_ = 0;
  int cap_ = 0;
};

}  // namespace

int small_nu(const Graph& g, int r, int cap) {
  if (g.order() > kSmallMaxN) throw PreconditionError("small_nu supports at most 8 vertices");
  if (r < 2) throw PreconditionError("small_nu requires r >= 2");
  std::uint16_t adj[kSmallMaxN] = {};
  for (auto [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint16_t>(1U << v);
    adj[v] |= static_cast<std::uint16_t>(1U << u);
  }
  return SmallPacker(g.order(), r).solve(adj, cap);
}

std::vector<PhiRow> phi_table(int n, int r, int max_n) {
  if (r < 3) throw PreconditionError("phi_table requires r >= 3");
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > max_n || n > kSmallMaxN) {
    throw PreconditionError("phi_table: n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                            std::to_string(std::min(max_n, kSmallMaxN)));
  }
  const int slots = n * (n - 1) / 2;
  const long turan = turan_edge_count(n, r - 1);
  std::vector<std::pair<int, int>> ends;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) ends.emplace_back(u, v);
  }
  std::vector<int> best(static_cast<std::size_t>(slots) + 1, std::numeric_limits<int>::max());
  std::vector<long> seen(static_cast<std::size_t>(slots) + 1, 0);

  SmallPacker packer(n, r);
  std::uint16_t adj[kSmallMaxN] = {};
  long edges = 0;
  long triangles = 0;
  auto visit = [&] {
    ++seen[edges];
    if (edges < turan || best[edges] == 0) return;
    // Triangle-free graphs have no r-clique for r >= 3.
    const int nu = triangles == 0 ? 0 : packer.solve(adj, best[edges]);
    best[edges] = std::min(best[edges], nu);
  };
  visit();
  const std::uint64_t total = std::uint64_t{1} << slots;
  for (std::uint64_t i = 1; i < total; ++i) {
    // Gray code: step i flips the bit at the lowest set bit of i.
    const auto [u, v] = ends[static_cast<std::size_t>(std::countr_zero(i))];
    const int common = std::popcount(static_cast<unsigned>(adj[u] & adj[v]));
    if ((adj[u] >> v) & 1U) {
      adj[u] &= static_cast<std::uint16_t>(~(1U << v));
      adj[v] &= static_cast<std::uint16_t>(~(1U << u));
      --edges;
      triangles -= common;
    } else {
      adj[u] |= static_cast<std::uint16_t>(1U << v);
      adj[v] |= static_cast<std::uint16_t>(1U << u);
      ++edges;
      triangles += common;
    }
    visit();
  }

  std::vector<PhiRow> rows;
  for (long e = turan; e <= slots; ++e) rows.push_back({e, e - turan, best[e], seen[e]});
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<int> t_near_threshold(int n, const Rational& eps, int radius) {
  const Rational center = (1 + eps) * 6 * n / 13;
  std::vector<int> out;
  for (int t = 0; 5 * t <= 3 * n; t += 6) {
    Rational gap = Rational(t) - center;
    if (abs(gap) <= radius) out.push_back(t);
  }
  return out;
}

std::vector<AbcRow> abc_sweep(const std::vector<int>& ns, const std::vector<int>& ts,
                              const std::optional<Rational>& eps) {
  std::vector<AbcRow> rows;
  for (int n : ns) {
    for (int t : ts) {
      AbcRow row;
      row.n = n;
      row.t = t;
      try {
        row.example = concluding_example(n, t);
        if (eps) row.below_threshold = row.example->f_t < (1 - *eps / 100) * row.example->k_formula;
      } catch (const PreconditionError& e) {
        row.note = std::string("skipped: ") + e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_abc_csv(std::ostream& out, const std::vector<AbcRow>& rows) {
  out << "n,t,size_a,size_b,size_c,e,k_integral,k_formula,f_t,triangles,edges_in_triangles,"
         "f_over_k,below_threshold,note\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.t << ',';
    if (const auto& ex = row.example) {
      out << ex->size_a << ',' << ex->size_b << ',' << ex->size_c << ',' << ex->edges << ','
          << ex->k_integral << ',' << to_string(ex->k_formula) << ',' << to_string(ex->f_t) << ','
          << ex->triangles << ',' << ex->edges_in_triangles << ','
          << (sgn(ex->k_formula) != 0 ? to_string(Rational(ex->f_t / ex->k_formula)) : "") << ',';
    } else {
      out << ",,,,,,,,,,";
    }
    out << (row.below_threshold ? (*row.below_threshold ? "true" : "false") : "") << ','
        << csv_field(row.note) << '\n';
  }
}

}  // namespace cliquepack
