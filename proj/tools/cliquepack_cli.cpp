#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cliquepack/lab.hpp"
#include "cliquepack/multipartite.hpp"
#include "cliquepack/serialize.hpp"
#include "cliquepack/symmetrization.hpp"

using namespace cliquepack;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3, kViolation = 4 };

const char* const kResultColumnHelp = R"(CSV columns (fixed order, new columns are appended):
  instance            descriptor of the generated instance
  n, e, r             order, edge count, clique size
  k                   e - (1 - 1/(r-1)) n^2 / 2, as num/den
  bound_2k_over_r     2k / r
  nu_star             fractional packing number (empty if skipped)
  nu_integral         integral packing number (with --with-nu)
  constructed_value   value of the constructive packing (multipartite only)
  theorem_ok          nu_star >= 2k/r
  construction_ok     2k/r <= constructed_value <= nu_star and feasible
  integral_ok         nu_integral <= nu_star
  status              ok, or budget / violation notes
  wall_ms             per-instance time (with --timing)
Exit status 4 when any present check is false.)";

const char* const kAbcColumnHelp = R"(CSV columns: n,t,size_a,size_b,size_c,e,k_integral,k_formula,f_t,
triangles,edges_in_triangles,f_over_k,below_threshold,note
below_threshold is f(t) < (1 - eps/100) k and is empty without --epsilon.
Pairs that are not realizable keep only n, t and a note.)";

struct Common {
  int r = 3;
  std::string out_path;
  SolverBudgets budgets;
};

void add_budget_options(CLI::App* cmd, Common& common) {
  cmd->add_option("--lp-pivot-budget", common.budgets.lp_pivot_budget, "simplex pivot limit")
      ->capture_default_str();
  cmd->add_option("--lp-max-cliques", common.budgets.lp_max_cliques, "largest LP attempted (r-cliques)")
      ->capture_default_str();
  cmd->add_option("--bb-node-budget", common.budgets.bb_node_budget, "branch and bound node limit")
      ->capture_default_str();
}

void add_r(CLI::App* cmd, Common& common) {
  cmd->add_option("--r", common.r, "clique size")->capture_default_str()->check(CLI::Range(2, 64));
}

void add_out(CLI::App* cmd, Common& common) {
  cmd->add_option("--out", common.out_path, "write output here instead of stdout");
}

// Output goes to a file only after the command has produced all of it.
class Output {
public:
  explicit Output(std::string path) : path_(std::move(path)) {}
  std::ostream& stream() { return path_.empty() ? std::cout : buffer_; }
  void flush() {
    if (path_.empty()) {
      std::cout.flush();
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + path_ + "'");
    file << buffer_.str();
  }

private:
  std::string path_;
  std::ostringstream buffer_;
};

Rational rational_option(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fractional clique packing toolkit"};
  app.require_subcommand(1);
  Common common;

  // nu-star
  std::string graph_path;
  bool with_json = false, with_theorem = false;
  auto* nu_star_cmd = app.add_subcommand("nu-star", "fractional r-clique packing number of a graph file");
  nu_star_cmd->add_option("graph", graph_path, "graph file: 'n m' then m lines 'u v'")->required();
  nu_star_cmd->add_flag("--json", with_json, "also print an optimal packing as JSON");
  nu_star_cmd->add_flag("--theorem", with_theorem, "also print the nu* >= 2k/r report (exit 4 if it fails)");

  // nu
  auto* nu_cmd = app.add_subcommand("nu", "maximum number of edge-disjoint r-cliques");
  nu_cmd->add_option("graph", graph_path, "graph file")->required();

  // verify-theorem
  ExperimentConfig config;
  std::string family = "random-gnp", p_text = "1/2";
  bool skip_lp = false;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "seeded sweep of nu* >= 2k/r, CSV output");
  verify_cmd->footer(kResultColumnHelp);
  verify_cmd->add_option("--family", family, "random-gnp | random-multipartite | turan-plus-edges | example-abc")
      ->capture_default_str();
  verify_cmd->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
  verify_cmd->add_option("--n-min", config.n_min, "smallest order")->capture_default_str();
  verify_cmd->add_option("--n-max", config.n_max, "largest order")->capture_default_str();
  verify_cmd->add_option("--count", config.count, "instances per order")->capture_default_str();
  verify_cmd->add_option("--p", p_text, "edge probability num/den (random-gnp)")->capture_default_str();
  verify_cmd->add_option("--extra-edges", config.extra_edges, "edges added inside parts (turan-plus-edges)")
      ->capture_default_str();
  verify_cmd->add_flag("--exhaustive", config.exhaustive, "random-multipartite: every profile of each order");
  verify_cmd->add_option("--max-parts", config.max_parts, "cap on part count with --exhaustive (0 = none)")
      ->capture_default_str();
  verify_cmd->add_flag("--with-nu", config.with_nu, "also compute nu by branch and bound");
  verify_cmd->add_flag("--skip-lp", skip_lp, "do not solve the packing LP");
  verify_cmd->add_flag("--timing", config.timing, "fill wall_ms (output is then not reproducible)");
  verify_cmd->add_option("--jobs", config.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1, 256));

  // symmetrize
  auto* sym_cmd = app.add_subcommand("symmetrize", "merge clone classes down to a complete multipartite graph");
  sym_cmd->add_option("graph", graph_path, "graph file")->required();

  // construct and scalars
  std::vector<int> parts;
  auto* construct_cmd = app.add_subcommand("construct", "constructive packing of a complete multipartite graph");
  construct_cmd->add_option("--profile", parts, "part sizes, e.g. 3,2,2")->required()->delimiter(',');
  bool expanded = false;
  construct_cmd->add_flag("--expand", expanded, "list every clique instead of part types");
  auto* scalars_cmd = app.add_subcommand("scalars", "k_G, t_H, k_H and alpha for a profile");
  scalars_cmd->add_option("--profile", parts, "part sizes, e.g. 3,2,2")->required()->delimiter(',');

  // phi
  int phi_n = 0, phi_max_n = 7;
  auto* phi_cmd = app.add_subcommand("phi", "exhaustive minimum of nu over graphs with t(n) + k edges");
  phi_cmd->footer("CSV columns: n,r,edges,k,phi,graphs");
  phi_cmd->add_option("--n", phi_n, "order")->required();
  phi_cmd->add_option("--max-n", phi_max_n, "refuse orders above this")->capture_default_str();

  // example-abc
  std::vector<int> abc_ns, abc_ts;
  std::string eps_text;
  int radius = 12;
  auto* abc_cmd = app.add_subcommand("example-abc", "A/B/C construction rows");
  abc_cmd->footer(kAbcColumnHelp);
  abc_cmd->add_option("--n", abc_ns, "orders (divisible by 6)")->required()->delimiter(',');
  abc_cmd->add_option("--t", abc_ts, "sizes of A (divisible by 6)")->delimiter(',');
  abc_cmd->add_option("--epsilon", eps_text, "num/den; without --t, sweep t near (1+eps) 6n/13");
  abc_cmd->add_option("--radius", radius, "half-width of the t sweep")->capture_default_str();

  for (auto* cmd : {nu_star_cmd, nu_cmd, verify_cmd, sym_cmd, construct_cmd, scalars_cmd, phi_cmd}) add_r(cmd, common);
  for (auto* cmd : {nu_star_cmd, nu_cmd, verify_cmd, sym_cmd}) add_budget_options(cmd, common);
  for (auto* cmd : {nu_star_cmd, nu_cmd, verify_cmd, sym_cmd, construct_cmd, scalars_cmd, phi_cmd, abc_cmd}) {
    add_out(cmd, common);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  Output out(common.out_path);
  std::ostream& os = out.stream();
  int code = kOk;
  try {
    if (*nu_star_cmd) {
      const Graph g = read_graph_file(graph_path);
      const auto result = nu_star(g, common.r, common.budgets);
      os << to_string(result.value) << '\n';
      if (with_json) os << to_json(result.packing).dump(2) << '\n';
      if (with_theorem) {
        const auto report = check_main_theorem(g, common.r, common.budgets);
        os << to_json(report).dump(2) << '\n';
        if (!report.satisfied) code = kViolation;
      }
    } else if (*nu_cmd) {
      const Graph g = read_graph_file(graph_path);
      try {
        const auto result = nu_integral(g, common.r, common.budgets);
        os << result.value << '\n';
        for (const auto& q : result.cliques) {
          for (std::size_t i = 0; i < q.size(); ++i) os << (i ? " " : "") << q[i];
          os << '\n';
        }
      } catch (const IntegralBudgetExceeded& e) {
        os << "lower bound " << e.best().value << '\n';
        out.flush();
        throw;
      }
    } else if (*verify_cmd) {
      config.family = parse_family(family);
      config.p = rational_option(p_text, "--p");
      config.r = common.r;
      config.budgets = common.budgets;
      config.with_nu_star = !skip_lp;
      const auto rows = run_sweep(config);
      write_csv(os, rows);
      for (const auto& row : rows) {
        if (!row.passed()) code = kViolation;
      }
    } else if (*sym_cmd) {
      const auto trace = symmetrize(read_graph_file(graph_path), common.r, common.budgets);
      os << to_json(trace).dump(2) << '\n';
      if (!trace.is_monotone()) code = kViolation;
    } else if (*construct_cmd) {
      const MultipartiteProfile profile(parts);
      const auto built = construct_typed_packing(profile, common.r);
      Json doc;
      doc["profile"] = to_json(profile);
      doc["r"] = common.r;
      doc["branch"] = to_string(built.branch);
      doc["value"] = to_string(built.value);
      doc["bound"] = to_string(built.bound);
      if (expanded) {
        doc["packing"] = to_json(built.packing.expand(profile));
      } else {
        Json types = Json::array();
        for (const auto& [key, w] : built.packing.weights) types.push_back({{"parts", key}, {"weight", to_string(w)}});
        doc["part_types"] = types;
      }
      os << doc.dump(2) << '\n';
    } else if (*scalars_cmd) {
      os << to_json(compute_scalars(MultipartiteProfile(parts), common.r)).dump(2) << '\n';
    } else if (*phi_cmd) {
      const auto rows = phi_table(phi_n, common.r, phi_max_n);
      os << "n,r,edges,k,phi,graphs\n";
      for (const auto& row : rows) {
        os << phi_n << ',' << common.r << ',' << row.edges << ',' << row.k << ',' << row.phi << ','
           << row.graphs << '\n';
      }
    } else if (*abc_cmd) {
      std::optional<Rational> eps;
      if (!eps_text.empty()) eps = rational_option(eps_text, "--epsilon");
      if (abc_ts.empty() && !eps) throw ParseError("example-abc needs --t or --epsilon");
      std::vector<AbcRow> rows;
      for (int n : abc_ns) {
        const auto ts = abc_ts.empty() ? t_near_threshold(n, *eps, radius) : abc_ts;
        auto part = abc_sweep({n}, ts, eps);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      write_abc_csv(os, rows);
    }
    out.flush();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return code;
}
