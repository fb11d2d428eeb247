// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// process exits non-zero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hicm/diffusion.hpp"
#include "hicm/generators.hpp"
#include "hicm/grid.hpp"
#include "hicm/habituation.hpp"
#include "hicm/oracle.hpp"
#include "hicm/rng.hpp"
#include "hicm/stats.hpp"
#include "test_util.hpp"

using namespace hicm;
using namespace hicm::testing;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "[" << (number < 10 ? " " : "") << number << "] " << name << " ... "
            << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

bool check_oracle_equivalence(std::string& detail) {
  std::vector<Graph> graphs = all_graphs_up_to_iso(1);
  for (int n = 2; n <= 5; ++n) {
    auto more = all_graphs_up_to_iso(n);
    for (auto& g : more) graphs.push_back(std::move(g));
  }
  graphs.push_back(star(6));
  graphs.push_back(triangle());
  graphs.push_back(path(6));

  struct Setup {
    double pp;
    double tau;
    Seeding seeding;
    bool hab;
  };
  std::vector<Setup> setups;
  for (double pp : {0.2, 0.5, 0.8})
    for (Seeding st : {Seeding::SingleStage, Seeding::Sequential}) {
      setups.push_back({pp, 1.0, st, false});
      for (double tau : {1.0, 5.0}) setups.push_back({pp, tau, st, true});
    }

  const int runs = 100000;
  int compared = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    auto ranking = rank_nodes(g, Ranking::Degree, 0);
    std::vector<DiffusionConfig> cfgs;
    std::vector<double> exact;
    for (const Setup& s : setups) {
      DiffusionConfig cfg;
      cfg.propagation_probability = s.pp;
      cfg.seed_fraction = 0.35;
      cfg.seeding = s.seeding;
      cfg.habituation_enabled = s.hab;
      cfg.habituation_params = HabituationParams(1.05, s.tau);
      cfgs.push_back(cfg);
      exact.push_back(exact_expected_coverage(g, cfg, ranking).expected_coverage);
    }
    std::vector<double> sums(cfgs.size(), 0.0);
    Simulator sim(g);
    EdgeDraws draws;
    for (int r = 0; r < runs; ++r) {
      fill_draws(g, derive_seed(1000 + gi, 0, r), draws);
      for (std::size_t c = 0; c < cfgs.size(); ++c)
        sums[c] += sim.run(cfgs[c], draws, ranking).coverage;
    }
    for (std::size_t c = 0; c < cfgs.size(); ++c) {
      double p = exact[c];
      double mean = sums[c] / runs;
      double tol = 4.0 * std::sqrt(std::max(p * (1.0 - p), 0.0) / runs) + 1e-9;
      if (std::abs(mean - p) > tol) {
        detail = "graph " + std::to_string(gi) + " setup " + std::to_string(c) + ": mc " +
                 fmt(mean) + " vs exact " + fmt(p);
        return false;
      }
      ++compared;
    }
  }
  auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
          .count();
  detail = std::to_string(compared) + " comparisons, " + std::to_string(secs) + "s";
  return secs < 300;
}

bool check_kernel_table(std::string& detail) {
  const HabituationParams tau1(1.05, 1.0);
  const HabituationParams tau20(1.05, 20.0);
  HabituationState s;
  HabituationState d1 = habituate_step(s, tau1);
  HabituationState d2 = habituate_step(d1, tau1);
  HabituationState slow = habituate_step(HabituationState{}, tau20);
  HabituationState r1 = recover_step(d1, tau1);
  HabituationState deep = s;
  for (int i = 0; i < 400; ++i) deep = habituate_step(deep, tau1);

  struct Row {
    double got, full, printed;
  };
  const Row rows[] = {
      {d1.factor, 0.38089309439157653, 0.3808931},
      {d2.factor, 0.16424421738379230, 0.1642442},
      {slow.factor, 0.95128982957695360, 0.9512895},
      {r1.factor, 0.78335112299221577, 0.7833508},
      {deep.factor, 0.047619047619047619, 0.0476190},
  };
  for (const Row& r : rows) {
    if (std::abs(r.got - r.full) > 1e-9) {
      detail = "closed form mismatch: " + fmt(r.got) + " vs " + fmt(r.full);
      return false;
    }
    if (std::abs(r.got - r.printed) > 5e-7) {
      detail = "value far from its published rounding: " + fmt(r.got);
      return false;
    }
  }

  Rng rng(31);
  const double floor = tau1.floor();
  for (int i = 0; i < 2000; ++i) {
    double f = floor + (1.0 - floor) * (0.001 + 0.999 * rng.next_double());
    auto n = pseudo_count(f, tau1);
    if (!n) return false;
    double back = 1.0 - (1.0 / 1.05) * (1.0 - std::exp(-1.05 * *n));
    if (std::abs(back - f) > 1e-12) {
      detail = "pseudo-count round trip error " + fmt(std::abs(back - f));
      return false;
    }
  }
  return true;
}

bool check_monotone_coupling(std::string& detail) {
  Rng rng(47);
  int ok = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    Graph g = (i % 2 == 0) ? generate_er(10 + i % 41, 0.05 + 0.15 * (i % 7) / 6.0, 5000 + i)
                           : generate_ba(10 + i % 41, 1 + i % 4, 5000 + i);
    DiffusionConfig cfg;
    cfg.propagation_probability = 0.05 + 0.9 * rng.next_double();
    cfg.seed_fraction = 0.05 + 0.3 * rng.next_double();
    cfg.seeding = Seeding::SingleStage;
    cfg.habituation_params = HabituationParams(1.05, 0.5 + 10.0 * rng.next_double());
    EdgeDraws draws = draw_coordinated(g, 9000 + i);
    auto ranking = rank_nodes(g, (i % 3 == 0) ? Ranking::Random : Ranking::Degree, i);
    Simulator sim(g);
    cfg.habituation_enabled = true;
    sim.run(cfg, draws, ranking);
    auto hab_mask = sim.active_mask();
    cfg.habituation_enabled = false;
    sim.run(cfg, draws, ranking);
    const auto& plain_mask = sim.active_mask();
    bool subset = true;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (hab_mask[v] && !plain_mask[v]) subset = false;
    if (subset) ++ok;
  }
  detail = std::to_string(ok) + "/" + std::to_string(total) + " subset";
  return ok == total;
}

bool check_tree_equivalence(std::string& detail) {
  int ok = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    Graph t = random_tree(2 + i % 40, 7000 + i);
    DiffusionConfig cfg;
    cfg.propagation_probability = 0.1 + 0.8 * (i % 9) / 8.0;
    cfg.seed_fraction = 0.001;  // budget 1
    cfg.habituation_params = HabituationParams(1.05, 1.0 + i % 5);
    EdgeDraws draws = draw_coordinated(t, 8000 + i);
    auto ranking = rank_nodes(t, Ranking::Random, i);
    Simulator sim(t);
    cfg.habituation_enabled = true;
    sim.run(cfg, draws, ranking);
    auto hab_mask = sim.active_mask();
    cfg.habituation_enabled = false;
    sim.run(cfg, draws, ranking);
    if (hab_mask == sim.active_mask()) ++ok;
  }
  detail = std::to_string(ok) + "/" + std::to_string(total) + " identical";
  return ok == total;
}

// Shared desk-scale experiment for the directional checks.
struct DeskResults {
  std::vector<double> taus;
  std::vector<ResultRow> rows;  // quartets per tau
};

DeskResults run_desk_experiment() {
  GridSpec spec;
  spec.networks = {"ba:n=1000,m=7,seed=12"};
  spec.propagation_probabilities = {0.05};
  spec.seed_fractions = {0.02};
  spec.rankings = {Ranking::Degree};
  spec.taus = {1, 2, 3, 4, 5, 10, 15, 20};
  spec.runs_per_config = 200;
  spec.base_seed = 2024;
  Graph g = resolve_network(spec.networks[0]);
  std::vector<Graph> graphs;
  graphs.push_back(std::move(g));
  return DeskResults{spec.taus, execute_grid(spec, graphs, 1)};
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j < idx.size() && v[idx[j]] == v[idx[i]]) ++j;
      double avg = (i + j - 1) / 2.0 + 1.0;
      for (std::size_t k = i; k < j; ++k) r[idx[k]] = avg;
      i = j;
    }
    return r;
  };
  std::vector<double> rx = ranks(x), ry = ranks(y);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) mx += rx[i], my += ry[i];
  mx /= rx.size();
  my /= ry.size();
  double num = 0, dx = 0, dy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    dx += (rx[i] - mx) * (rx[i] - mx);
    dy += (ry[i] - my) * (ry[i] - my);
  }
  return num / std::sqrt(dx * dy);
}

bool check_tau_direction(const DeskResults& desk, std::string& detail) {
  std::vector<double> decreases;
  for (std::size_t t = 0; t < desk.taus.size(); ++t) {
    const ResultRow& plain = desk.rows[4 * t + 0];
    const ResultRow& hab = desk.rows[4 * t + 1];
    decreases.push_back(relative_decrease(plain.mean_coverage, hab.mean_coverage));
  }
  double rho = spearman_rho(desk.taus, decreases);
  bool ratio_ok = decreases.front() >= 2.0 * decreases.back();
  detail = "decrease tau=1: " + fmt(decreases.front()) + "%, tau=20: " + fmt(decreases.back()) +
           "%, spearman " + fmt(rho);
  return ratio_ok && rho <= -0.9;
}

bool check_sequential_gain(const DeskResults& desk, std::string& detail) {
  // tau = 1 quartet
  const ResultRow& sp = desk.rows[0];
  const ResultRow& sh = desk.rows[1];
  const ResultRow& qp = desk.rows[2];
  const ResultRow& qh = desk.rows[3];
  double gain_hab = relative_increase(sh.mean_coverage, qh.mean_coverage);
  double gain_plain = relative_increase(sp.mean_coverage, qp.mean_coverage);
  int dominated = 0;
  for (std::size_t r = 0; r < sp.coverages.size(); ++r)
    if (qp.coverages[r] >= sp.coverages[r]) ++dominated;
  detail = "gain hab " + fmt(gain_hab) + "% vs plain " + fmt(gain_plain) + "%, per-run " +
           std::to_string(dominated) + "/" + std::to_string(sp.coverages.size());
  return gain_hab > gain_plain && dominated == static_cast<int>(sp.coverages.size());
}

bool check_duration_direction(std::string& detail) {
  // Same desk network, but with a seed budget large enough that the one-seed-
  // per-step cadence dominates the sequential timeline.
  GridSpec spec;
  spec.networks = {"ba:n=1000,m=7,seed=12"};
  spec.propagation_probabilities = {0.05};
  spec.seed_fractions = {0.05};
  spec.rankings = {Ranking::Degree};
  spec.taus = {1};
  spec.runs_per_config = 200;
  spec.base_seed = 2025;
  std::vector<Graph> graphs;
  graphs.push_back(resolve_network(spec.networks[0]));
  auto rows = execute_grid(spec, graphs, 1);
  const ResultRow& sp = rows[0];
  const ResultRow& qp = rows[2];
  const ResultRow& qh = rows[3];
  detail = "single " + fmt(sp.mean_duration) + ", sequential " + fmt(qp.mean_duration) +
           ", sequential hab " + fmt(qh.mean_duration);
  return qp.mean_duration >= 5.0 * sp.mean_duration && qh.mean_duration >= qp.mean_duration;
}

bool check_signed_rank(std::string& detail) {
  std::vector<double> d{1.0, 2.0, 3.0};
  PairedStats s = wilcoxon_signed_rank(d);
  if (std::abs(s.p_one_sided - 0.125) > 1e-12 || std::abs(s.pseudomedian - 2.0) > 1e-12) {
    detail = "p " + fmt(s.p_one_sided) + ", pseudomedian " + fmt(s.pseudomedian);
    return false;
  }
  Rng rng(61);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> sample;
    for (int i = 0; i < 25; ++i) sample.push_back(rng.next_double() - 0.45);
    PairedStats exact = wilcoxon_signed_rank(sample);
    double mean = 25.0 * 26.0 / 4.0;
    double sd = std::sqrt(25.0 * 26.0 * 51.0 / 24.0);
    auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    double upper = 1.0 - phi((exact.w_statistic - mean - 0.5) / sd);
    double lower = phi((exact.w_statistic - mean + 0.5) / sd);
    double p_norm = std::min(1.0, 2.0 * std::min(upper, lower));
    worst = std::max(worst, std::abs(exact.p_value - p_norm));
  }
  detail = "max exact-vs-normal gap " + fmt(worst);
  return worst < 0.01;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool check_cli_determinism(std::string& detail) {
  const char* cli = std::getenv("HICM_CLI");
  if (!cli) {
    detail = "HICM_CLI not set";
    return false;
  }
  fs::path base = fs::temp_directory_path() / "hicm_accept";
  fs::remove_all(base);
  fs::create_directories(base);
  fs::path cfg = base / "grid.cfg";
  {
    std::ofstream out(cfg);
    out << "networks = [er:n=60,p=0.08,seed=3, ba:n=60,m=2,seed=4]\n"
           "propagation_probabilities = [0.1, 0.3]\n"
           "seed_fractions = [0.05]\n"
           "rankings = [degree, random]\n"
           "taus = [1, 5]\n"
           "runs_per_config = 5\n"
           "base_seed = 11\n";
  }
  struct Invocation {
    std::string dir;
    int jobs;
  };
  std::vector<Invocation> invocations{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 4}};
  std::vector<std::string> results, summaries;
  for (const auto& inv : invocations) {
    fs::path out = base / inv.dir;
    std::string cmd = std::string("\"") + cli + "\" grid \"" + cfg.string() + "\" --out \"" +
                      out.string() + "\" --jobs " + std::to_string(inv.jobs) + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      detail = "grid invocation failed (" + inv.dir + ")";
      return false;
    }
    results.push_back(slurp(out / "results.csv"));
    summaries.push_back(slurp(out / "summary.csv"));
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i] != results[0] || summaries[i] != summaries[0]) {
      detail = "output differs at invocation " + std::to_string(i);
      return false;
    }
  }
  detail = std::to_string(results[0].size()) + " bytes, stable across reruns and --jobs";
  return !results[0].empty();
}

bool check_grid_cardinality(std::string& detail) {
  GridSpec spec;
  for (int i = 1; i <= 10; ++i)
    spec.networks.push_back("ba:n=1000,m=7,seed=" + std::to_string(i));
  for (int i = 0; i < 9; ++i) spec.propagation_probabilities.push_back(0.10 + 0.05 * i);
  spec.seed_fractions = {0.01, 0.02, 0.03, 0.04, 0.05, 0.1, 0.2};
  spec.rankings = {Ranking::Degree, Ranking::Random};
  spec.taus = {1, 2, 3, 4, 5};
  auto configs = expand_grid(spec);
  detail = std::to_string(configs.size()) + " configurations";
  return configs.size() == 6300;
}

}  // namespace

int main() {
  std::string d;

  d.clear();
  report(1, "monte-carlo mean matches exact enumeration on small graphs",
         check_oracle_equivalence(d), d);

  d.clear();
  report(2, "habituation kernel closed-form table and pseudo-count round trip",
         check_kernel_table(d), d);

  d.clear();
  report(3, "habituated active set is a subset of the plain one", check_monotone_coupling(d), d);

  d.clear();
  report(4, "habituation is a no-op on trees with a single seed", check_tree_equivalence(d), d);

  DeskResults desk = run_desk_experiment();

  d.clear();
  report(5, "coverage loss shrinks monotonically with tau", check_tau_direction(desk, d), d);

  d.clear();
  report(6, "sequential seeding gains more under habituation", check_sequential_gain(desk, d), d);

  d.clear();
  report(7, "sequential runs last much longer than single-stage",
         check_duration_direction(d), d);

  d.clear();
  report(8, "signed-rank test exactness", check_signed_rank(d), d);

  d.clear();
  report(9, "grid command output is byte-stable across reruns and --jobs",
         check_cli_determinism(d), d);

  d.clear();
  report(10, "full experiment grid expands to 6300 configurations", check_grid_cardinality(d), d);

  if (g_failures > 0) {
    std::cout << g_failures << " acceptance check(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance checks passed\n";
  return 0;
}
