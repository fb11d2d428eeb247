#include "hicm/grid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hicm/generators.hpp"
#include "hicm/rng.hpp"

namespace hicm {

const char* to_string(Ranking r) { return r == Ranking::Random ? "random" : "degree"; }
const char* to_string(Seeding s) { return s == Seeding::SingleStage ? "single" : "sequential"; }

std::vector<GridConfig> expand_grid(const GridSpec& spec) {
  if (spec.networks.empty() || spec.propagation_probabilities.empty() ||
      spec.seed_fractions.empty() || spec.rankings.empty() || spec.taus.empty())
    throw std::invalid_argument("expand_grid: empty axis");
  if (spec.runs_per_config < 1) throw std::invalid_argument("expand_grid: runs_per_config < 1");
  std::vector<GridConfig> out;
  out.reserve(spec.networks.size() * spec.propagation_probabilities.size() *
              spec.seed_fractions.size() * spec.rankings.size() * spec.taus.size());
  std::size_t index = 0, pair_index = 0;
  for (std::size_t n = 0; n < spec.networks.size(); ++n)
    for (std::size_t p = 0; p < spec.propagation_probabilities.size(); ++p)
      for (std::size_t s = 0; s < spec.seed_fractions.size(); ++s)
        for (std::size_t r = 0; r < spec.rankings.size(); ++r) {
          for (std::size_t t = 0; t < spec.taus.size(); ++t)
            out.push_back({index++, pair_index, n, p, s, r, t});
          ++pair_index;
        }
  return out;
}

namespace {

// Outcomes of one pair group (network, pp, sf, ranking): the tau-free plain
// runs plus one habituated pair per tau, all under shared draws per run.
struct PairGroupResult {
  std::vector<RunOutcome> single_plain;      // [run]
  std::vector<RunOutcome> sequential_plain;  // [run]
  std::vector<std::vector<RunOutcome>> single_hab;      // [tau][run]
  std::vector<std::vector<RunOutcome>> sequential_hab;  // [tau][run]
};

PairGroupResult run_pair_group(const GridSpec& spec, const Graph& g, const GridConfig& cfg0,
                               std::size_t pair_index) {
  const int runs = spec.runs_per_config;
  PairGroupResult res;
  res.single_plain.resize(runs);
  res.sequential_plain.resize(runs);
  res.single_hab.assign(spec.taus.size(), std::vector<RunOutcome>(runs));
  res.sequential_hab.assign(spec.taus.size(), std::vector<RunOutcome>(runs));

  DiffusionConfig base;
  base.propagation_probability = spec.propagation_probabilities[cfg0.pp];
  base.seed_fraction = spec.seed_fractions[cfg0.sf];
  base.ranking = spec.rankings[cfg0.ranking];

  Simulator sim(g);
  EdgeDraws draws;
  for (int r = 0; r < runs; ++r) {
    const std::uint64_t run_seed = derive_seed(spec.base_seed, pair_index, r);
    fill_draws(g, run_seed, draws);
    std::vector<NodeId> ranking = rank_nodes(g, base.ranking, run_seed);

    DiffusionConfig cfg = base;
    cfg.habituation_enabled = false;
    cfg.seeding = Seeding::SingleStage;
    res.single_plain[r] = sim.run(cfg, draws, ranking);
    cfg.seeding = Seeding::Sequential;
    res.sequential_plain[r] = sim.run(cfg, draws, ranking);

    cfg.habituation_enabled = true;
    for (std::size_t t = 0; t < spec.taus.size(); ++t) {
      cfg.habituation_params = HabituationParams(spec.alpha, spec.taus[t]);
      cfg.seeding = Seeding::SingleStage;
      res.single_hab[t][r] = sim.run(cfg, draws, ranking);
      cfg.seeding = Seeding::Sequential;
      res.sequential_hab[t][r] = sim.run(cfg, draws, ranking);
    }
  }
  return res;
}

ResultRow make_row(const GridSpec& spec, const GridConfig& c, Seeding seeding, bool hab,
                   const std::vector<RunOutcome>& outcomes) {
  ResultRow row;
  row.network = spec.networks[c.network];
  row.ranking = spec.rankings[c.ranking];
  row.pp = spec.propagation_probabilities[c.pp];
  row.seed_fraction = spec.seed_fractions[c.sf];
  row.seeding = seeding;
  row.habituation = hab;
  row.tau = spec.taus[c.tau];
  row.alpha = spec.alpha;
  double cov = 0.0, dur = 0.0;
  for (const RunOutcome& o : outcomes) {
    row.coverages.push_back(o.coverage);
    row.durations.push_back(o.duration);
    row.seeds_used.push_back(o.seeds_used);
    row.truncated.push_back(o.truncated ? 1 : 0);
    cov += o.coverage;
    dur += o.duration;
    row.any_truncated |= o.truncated;
  }
  row.mean_coverage = cov / outcomes.size();
  row.mean_duration = dur / outcomes.size();
  return row;
}

}  // namespace

std::vector<ResultRow> execute_grid(const GridSpec& spec, std::span<const Graph> networks,
                                    int jobs) {
  if (networks.size() != spec.networks.size())
    throw std::invalid_argument("execute_grid: network count mismatch");
  const std::vector<GridConfig> configs = expand_grid(spec);

  // Group configurations by pair_index; each group is one unit of work.
  std::vector<std::vector<const GridConfig*>> groups;
  for (const GridConfig& c : configs) {
    if (c.pair_index >= groups.size()) groups.resize(c.pair_index + 1);
    groups[c.pair_index].push_back(&c);
  }

  std::vector<PairGroupResult> group_results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= groups.size()) return;
      const GridConfig& c0 = *groups[i].front();
      group_results[i] = run_pair_group(spec, networks[c0.network], c0, i);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::vector<ResultRow> rows;
  rows.reserve(configs.size() * 4);
  for (const GridConfig& c : configs) {
    const PairGroupResult& gr = group_results[c.pair_index];
    rows.push_back(make_row(spec, c, Seeding::SingleStage, false, gr.single_plain));
    rows.push_back(make_row(spec, c, Seeding::SingleStage, true, gr.single_hab[c.tau]));
    rows.push_back(make_row(spec, c, Seeding::Sequential, false, gr.sequential_plain));
    rows.push_back(make_row(spec, c, Seeding::Sequential, true, gr.sequential_hab[c.tau]));
  }
  return rows;
}

namespace {

std::unordered_map<std::string, double> parse_kv_params(const std::string& body,
                                                        const std::string& spec) {
  std::unordered_map<std::string, double> kv;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad generator spec: " + spec);
    std::string key = item.substr(0, eq);
    kv[key] = std::stod(item.substr(eq + 1));
  }
  return kv;
}

double require(const std::unordered_map<std::string, double>& kv, const std::string& key,
               const std::string& spec) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw std::invalid_argument("generator spec missing '" + key + "': " + spec);
  return it->second;
}

}  // namespace

Graph resolve_network(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = colon == std::string::npos ? "" : spec.substr(0, colon);
  if (head == "ba" || head == "er" || head == "ws") {
    auto kv = parse_kv_params(spec.substr(colon + 1), spec);
    auto seed = static_cast<std::uint64_t>(kv.count("seed") ? kv.at("seed") : 1);
    if (head == "ba")
      return generate_ba(static_cast<NodeId>(require(kv, "n", spec)),
                         static_cast<NodeId>(require(kv, "m", spec)), seed);
    if (head == "er")
      return generate_er(static_cast<NodeId>(require(kv, "n", spec)), require(kv, "p", spec),
                         seed);
    return generate_ws(static_cast<NodeId>(require(kv, "n", spec)),
                       static_cast<NodeId>(require(kv, "k", spec)), require(kv, "beta", spec),
                       seed);
  }
  std::ifstream f(spec);
  if (!f) throw std::runtime_error("cannot open network file: " + spec);
  return load_edge_list(f);
}

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> parse_list(const std::string& value) {
  std::string v = trim(value);
  if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
  std::vector<std::string> items;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// Generator specs carry commas ("ba:n=100,m=3,seed=1"); a list fragment
// without ':' that looks like key=value continues the previous entry.
std::vector<std::string> parse_network_list(const std::string& value) {
  std::vector<std::string> items;
  for (const auto& frag : parse_list(value)) {
    bool continuation = !items.empty() && frag.find(':') == std::string::npos &&
                        frag.find('=') != std::string::npos &&
                        items.back().find(':') != std::string::npos;
    if (continuation)
      items.back() += "," + frag;
    else
      items.push_back(frag);
  }
  return items;
}

Ranking parse_ranking(const std::string& s) {
  if (s == "random") return Ranking::Random;
  if (s == "degree") return Ranking::Degree;
  throw std::invalid_argument("unknown ranking '" + s + "' (expected random or degree)");
}

}  // namespace

GridSpec parse_grid_spec(std::istream& in) {
  GridSpec spec;
  spec.networks.clear();
  bool saw_networks = false, saw_pp = false, saw_sf = false, saw_rank = false, saw_tau = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid config line " + std::to_string(line_no) +
                                  ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = t.substr(eq + 1);
    static const char* kKeys[] = {"networks",  "propagation_probabilities",
                                  "seed_fractions", "rankings",
                                  "taus",      "alpha",
                                  "runs_per_config", "base_seed"};
    if (std::find_if(std::begin(kKeys), std::end(kKeys),
                     [&](const char* k) { return key == k; }) == std::end(kKeys))
      throw std::invalid_argument("unknown grid config key '" + key + "'");
    try {
      if (key == "networks") {
        spec.networks = parse_network_list(value);
        saw_networks = true;
      } else if (key == "propagation_probabilities") {
        for (const auto& s : parse_list(value)) spec.propagation_probabilities.push_back(std::stod(s));
        saw_pp = true;
      } else if (key == "seed_fractions") {
        for (const auto& s : parse_list(value)) spec.seed_fractions.push_back(std::stod(s));
        saw_sf = true;
      } else if (key == "rankings") {
        for (const auto& s : parse_list(value)) spec.rankings.push_back(parse_ranking(s));
        saw_rank = true;
      } else if (key == "taus") {
        for (const auto& s : parse_list(value)) spec.taus.push_back(std::stod(s));
        saw_tau = true;
      } else if (key == "alpha") {
        spec.alpha = std::stod(trim(value));
      } else if (key == "runs_per_config") {
        spec.runs_per_config = std::stoi(trim(value));
      } else if (key == "base_seed") {
        spec.base_seed = std::stoull(trim(value));
      }
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      if (what.rfind("grid config key", 0) == 0) throw;
      throw std::invalid_argument("grid config key '" + key + "': " + what);
    }
  }
  if (!saw_networks || !saw_pp || !saw_sf || !saw_rank || !saw_tau)
    throw std::invalid_argument(
        "grid config missing required key(s); need networks, propagation_probabilities, "
        "seed_fractions, rankings, taus");
  return spec;
}

GridSpec parse_grid_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_grid_spec(in);
}

}  // namespace hicm
