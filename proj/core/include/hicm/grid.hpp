#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hicm/diffusion.hpp"
#include "hicm/graph.hpp"

namespace hicm {

/// Axes of a grid run. `networks` entries are either edge-list file paths or
/// generator specs ("ba:n=1000,m=7,seed=3", "er:n=500,p=0.02,seed=1",
/// "ws:n=100,k=6,beta=0.1,seed=2").
struct GridSpec {
  std::vector<std::string> networks;
  std::vector<double> propagation_probabilities;
  std::vector<double> seed_fractions;
  std::vector<Ranking> rankings;
  std::vector<double> taus;
  double alpha = 1.05;
  int runs_per_config = 5;
  std::uint64_t base_seed = 1;
};

/// One expanded configuration (seeding strategy and habituation flag are the
/// paired dimensions layered on top; they do not multiply here).
struct GridConfig {
  std::size_t index;       // lexicographic position in the expansion
  std::size_t pair_index;  // position ignoring tau; the seed-derivation unit
  std::size_t network;     // indices into the spec's axes
  std::size_t pp;
  std::size_t sf;
  std::size_t ranking;
  std::size_t tau;
};

/// Full cartesian product, lexicographic over (networks, pps, sfs, rankings,
/// taus). Throws on an empty axis.
std::vector<GridConfig> expand_grid(const GridSpec& spec);

struct ResultRow {
  std::string network;
  Ranking ranking;
  double pp;
  double seed_fraction;
  Seeding seeding;
  bool habituation;
  double tau;
  double alpha;
  double mean_coverage;
  double mean_duration;
  std::vector<double> coverages;  // per run, length = runs_per_config
  std::vector<double> durations;
  std::vector<std::uint32_t> seeds_used;
  std::vector<std::uint8_t> truncated;
  bool any_truncated = false;
};

/// Executes the grid: every configuration under coordinated paired execution,
/// averaged over runs_per_config runs. Emits 4 rows per configuration
/// (seeding x habituation). Non-habituated outcomes are tau-independent and
/// computed once per pair group, then replicated into each tau's rows.
/// Output is byte-stable for any `jobs` value.
std::vector<ResultRow> execute_grid(const GridSpec& spec, std::span<const Graph> networks,
                                    int jobs = 1);

/// Loads or generates the graph a `networks` entry names.
Graph resolve_network(const std::string& spec);

/// Parses the flat `key = value` / `key = [list]` grid configuration format.
/// Keys are the GridSpec field names. Throws with the offending key name.
GridSpec parse_grid_spec(std::istream& in);
GridSpec parse_grid_spec(const std::string& text);

const char* to_string(Ranking r);
const char* to_string(Seeding s);

}  // namespace hicm
