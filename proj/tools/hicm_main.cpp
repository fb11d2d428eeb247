// Command-line front end: network generation, single paired runs, grid
// execution, and oracle verification.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 verification failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hicm/diffusion.hpp"
#include "hicm/generators.hpp"
#include "hicm/graph.hpp"
#include "hicm/grid.hpp"
#include "hicm/metrics.hpp"
#include "hicm/oracle.hpp"
#include "hicm/report.hpp"
#include "hicm/rng.hpp"
#include "hicm/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFail = 3;

hicm::Ranking parse_ranking_flag(const std::string& s) {
  if (s == "random") return hicm::Ranking::Random;
  if (s == "degree") return hicm::Ranking::Degree;
  throw CLI::ValidationError("--ranking must be 'random' or 'degree'");
}

void print_graph_summary(std::ostream& out, const hicm::Graph& g,
                         const hicm::LoadSummary* load = nullptr) {
  hicm::GraphMetrics m = hicm::graph_metrics(g);
  out << "nodes: " << g.node_count() << "\n"
      << "edges: " << g.edge_count() << "\n"
      << "mean_degree: " << hicm::format_number(m.mean_degree) << "\n"
      << "global_clustering: " << hicm::format_number(m.global_clustering) << "\n"
      << "mean_eigenvector_centrality: "
      << hicm::format_number(m.mean_eigenvector_centrality) << "\n";
  if (load && (load->self_loops_dropped || load->duplicates_dropped))
    out << "dropped: " << load->self_loops_dropped << " self-loops, "
        << load->duplicates_dropped << " duplicate edges\n";
}

struct GenerateArgs {
  std::string model;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  double p = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& a) {
  hicm::Graph g = [&] {
    if (a.model == "ba") return hicm::generate_ba(a.n, a.m, a.seed);
    if (a.model == "er") return hicm::generate_er(a.n, a.p, a.seed);
    return hicm::generate_ws(a.n, a.k, a.beta, a.seed);
  }();
  if (a.out_path.empty()) {
    hicm::write_edge_list(g, std::cout);
    print_graph_summary(std::cerr, g);
  } else {
    std::ofstream f(a.out_path);
    if (!f) {
      std::cerr << "error: cannot write " << a.out_path << "\n";
      return kExitIo;
    }
    hicm::write_edge_list(g, f);
    print_graph_summary(std::cout, g);
  }
  return kExitOk;
}

struct RunArgs {
  std::string network;
  double pp = 0.1;
  double sf = 0.05;
  std::string ranking = "random";
  std::string seeding = "both";    // single | sequential | both
  std::string habituation = "both";  // on | off | both
  double tau = 1.0;
  double alpha = 1.05;
  int runs = 1;
  std::uint64_t seed = 1;
};

int cmd_run(const RunArgs& a) {
  hicm::Graph g = hicm::resolve_network(a.network);
  hicm::DiffusionConfig base;
  base.propagation_probability = a.pp;
  base.seed_fraction = a.sf;
  base.ranking = parse_ranking_flag(a.ranking);
  base.habituation_params = hicm::HabituationParams(a.alpha, a.tau);

  const bool want_single = a.seeding != "sequential";
  const bool want_seq = a.seeding != "single";
  const bool want_hab = a.habituation != "off";
  const bool want_plain = a.habituation != "on";

  hicm::write_run_record_header(std::cout);
  for (int r = 0; r < a.runs; ++r) {
    std::uint64_t run_seed = hicm::derive_seed(a.seed, 0, r);
    hicm::PairedOutcomes o = hicm::run_paired(g, base, run_seed);
    auto emit = [&](hicm::Seeding st, bool hab, const hicm::RunOutcome& out) {
      hicm::write_run_record(std::cout, a.network, base.ranking, a.pp, a.sf, st, hab, a.tau,
                             a.alpha, r, out);
    };
    using hicm::Seeding;
    if (want_single && want_plain) emit(Seeding::SingleStage, false, o.single_plain);
    if (want_single && want_hab) emit(Seeding::SingleStage, true, o.single_habituated);
    if (want_seq && want_plain) emit(Seeding::Sequential, false, o.sequential_plain);
    if (want_seq && want_hab) emit(Seeding::Sequential, true, o.sequential_habituated);
  }
  return kExitOk;
}

struct GridArgs {
  std::string config_path;
  std::string out_dir = ".";
  int jobs = 1;
};

int cmd_grid(const GridArgs& a) {
  std::ifstream f(a.config_path);
  if (!f) {
    std::cerr << "error: cannot open grid config " << a.config_path << "\n";
    return kExitIo;
  }
  hicm::GridSpec spec = hicm::parse_grid_spec(f);
  std::vector<hicm::Graph> networks;
  networks.reserve(spec.networks.size());
  for (const std::string& s : spec.networks) networks.push_back(hicm::resolve_network(s));

  std::vector<hicm::ResultRow> rows = hicm::execute_grid(spec, networks, a.jobs);

  std::filesystem::create_directories(a.out_dir);
  const std::string results_path = a.out_dir + "/results.csv";
  const std::string summary_path = a.out_dir + "/summary.csv";
  std::ofstream results(results_path);
  if (!results) {
    std::cerr << "error: cannot write " << results_path << "\n";
    return kExitIo;
  }
  hicm::write_run_records(results, rows);

  std::ofstream summary(summary_path);
  if (!summary) {
    std::cerr << "error: cannot write " << summary_path << "\n";
    return kExitIo;
  }
  std::vector<hicm::SummaryRow> all;
  for (const char* axis : {"network", "ranking", "pp", "seed_fraction", "tau"}) {
    std::vector<std::string> by{axis};
    auto part = hicm::summarize(rows, by);
    all.insert(all.end(), part.begin(), part.end());
  }
  hicm::write_summary(summary, all);
  std::cout << "wrote " << results_path << " and " << summary_path << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string network;
  double pp = 0.5;
  double sf = 0.25;
  std::string ranking = "degree";
  std::string seeding = "single";
  bool habituation = false;
  double tau = 1.0;
  double alpha = 1.05;
  long samples = 100000;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
  hicm::Graph g = hicm::resolve_network(a.network);
  hicm::DiffusionConfig cfg;
  cfg.propagation_probability = a.pp;
  cfg.seed_fraction = a.sf;
  cfg.ranking = parse_ranking_flag(a.ranking);
  cfg.seeding = a.seeding == "sequential" ? hicm::Seeding::Sequential : hicm::Seeding::SingleStage;
  cfg.habituation_enabled = a.habituation;
  cfg.habituation_params = hicm::HabituationParams(a.alpha, a.tau);

  std::vector<hicm::NodeId> ranking = hicm::rank_nodes(g, cfg.ranking, a.seed);
  hicm::OracleResult oracle = hicm::exact_expected_coverage(g, cfg, ranking);

  hicm::Simulator sim(g);
  hicm::EdgeDraws draws;
  double sum = 0.0;
  for (long i = 0; i < a.samples; ++i) {
    hicm::fill_draws(g, hicm::derive_seed(a.seed, 0, i), draws);
    sum += sim.run(cfg, draws, ranking).coverage;
  }
  const double mean = sum / a.samples;
  const double p = oracle.expected_coverage;
  const double se = std::sqrt(std::max(p * (1.0 - p), 1e-300) / a.samples);
  const bool pass = std::abs(mean - p) <= 4.0 * se;
  std::cout << "oracle_expected_coverage: " << hicm::format_number(p) << "\n"
            << "oracle_regions: " << oracle.regions << "\n"
            << "oracle_total_mass: " << hicm::format_number(oracle.total_mass) << "\n"
            << "monte_carlo_mean: " << hicm::format_number(mean) << "\n"
            << "standard_error: " << hicm::format_number(se) << "\n"
            << "result: " << (pass ? "pass" : "FAIL") << " (4-sigma bound)\n";
  return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Habituation-aware independent cascade simulation toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic network");
  generate->require_subcommand(1);
  auto add_common_gen = [&](CLI::App* sub) {
    sub->add_option("--n", gen.n, "node count")->required();
    sub->add_option("--seed", gen.seed, "random seed");
    sub->add_option("--out", gen.out_path, "output edge-list path (default: stdout)");
  };
  auto* gen_ba = generate->add_subcommand("ba", "Barabasi-Albert");
  add_common_gen(gen_ba);
  gen_ba->add_option("--m", gen.m, "edges per new node")->required();
  auto* gen_er = generate->add_subcommand("er", "Erdos-Renyi");
  add_common_gen(gen_er);
  gen_er->add_option("--p", gen.p, "edge probability")->required();
  auto* gen_ws = generate->add_subcommand("ws", "Watts-Strogatz");
  add_common_gen(gen_ws);
  gen_ws->add_option("--k", gen.k, "ring neighbours (even)")->required();
  gen_ws->add_option("--beta", gen.beta, "rewiring probability")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Paired coordinated runs on one network");
  run_cmd->add_option("network", run.network, "edge-list path or generator spec")->required();
  run_cmd->add_option("--pp", run.pp, "propagation probability");
  run_cmd->add_option("--sf", run.sf, "seed fraction");
  run_cmd->add_option("--ranking", run.ranking, "random | degree");
  run_cmd->add_option("--seeding", run.seeding, "single | sequential | both");
  run_cmd->add_option("--habituation", run.habituation, "on | off | both");
  run_cmd->add_option("--tau", run.tau, "habituation time constant");
  run_cmd->add_option("--alpha", run.alpha, "habituation recovery rate");
  run_cmd->add_option("--runs", run.runs, "number of coordinated runs");
  run_cmd->add_option("--seed", run.seed, "base random seed");

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "Execute a parameter grid");
  grid_cmd->add_option("config", grid.config_path, "grid configuration file")->required();
  grid_cmd->add_option("--out", grid.out_dir, "output directory");
  grid_cmd->add_option("--jobs", grid.jobs, "worker threads");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check Monte-Carlo mean against the exact oracle");
  verify_cmd->add_option("network", verify.network, "edge-list path or generator spec")->required();
  verify_cmd->add_option("--pp", verify.pp, "propagation probability");
  verify_cmd->add_option("--sf", verify.sf, "seed fraction");
  verify_cmd->add_option("--ranking", verify.ranking, "random | degree");
  verify_cmd->add_option("--seeding", verify.seeding, "single | sequential");
  verify_cmd->add_flag("--habituation", verify.habituation, "enable habituation");
  verify_cmd->add_option("--tau", verify.tau, "habituation time constant");
  verify_cmd->add_option("--alpha", verify.alpha, "habituation recovery rate");
  verify_cmd->add_option("--samples", verify.samples, "Monte-Carlo sample count");
  verify_cmd->add_option("--seed", verify.seed, "base random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_ba->parsed()) {
      gen.model = "ba";
      return cmd_generate(gen);
    }
    if (gen_er->parsed()) {
      gen.model = "er";
      return cmd_generate(gen);
    }
    if (gen_ws->parsed()) {
      gen.model = "ws";
      return cmd_generate(gen);
    }
    if (run_cmd->parsed()) return cmd_run(run);
    if (grid_cmd->parsed()) return cmd_grid(grid);
    if (verify_cmd->parsed()) return cmd_verify(verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
