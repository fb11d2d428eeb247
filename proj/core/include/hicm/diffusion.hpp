#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hicm/graph.hpp"
#include "hicm/habituation.hpp"

namespace hicm {

enum class Ranking { Random, Degree };
enum class Seeding { SingleStage, Sequential };

struct DiffusionConfig {
  double propagation_probability = 0.1;   // PP
  double seed_fraction = 0.05;            // SF, budget = ceil(SF * |V|)
  Ranking ranking = Ranking::Random;
  Seeding seeding = Seeding::SingleStage;
  bool habituation_enabled = false;
  HabituationParams habituation_params{};
  std::uint32_t max_steps = 0;            // 0 = 10 * |V|
};

/// One uniform [0,1) value per directed edge, shared across paired setups.
/// Edge i's slots are 2i (u->v) and 2i+1 (v->u), matching Graph::Neighbor.
struct EdgeDraws {
  std::vector<double> values;
  std::uint64_t seed = 0;
};

EdgeDraws draw_coordinated(const Graph& g, std::uint64_t run_seed);

/// In-place variant reusing the vector's capacity.
void fill_draws(const Graph& g, std::uint64_t run_seed, EdgeDraws& out);

/// Degree: descending degree, ties broken by ascending dense id.
/// Random: uniform permutation derived from run_seed, shared across paired
/// setups.
std::vector<NodeId> rank_nodes(const Graph& g, Ranking strategy, std::uint64_t run_seed);

struct RunOutcome {
  double coverage = 0.0;         // fraction of nodes active at termination
  std::uint32_t duration = 0;    // last step with any activation or seeding
  std::uint32_t seeds_used = 0;
  bool truncated = false;        // hit max_steps
  std::vector<std::uint32_t> activations_per_step;
};

/// Reusable single-run executor. One instance holds the per-node scratch
/// state for a fixed graph; run() never allocates after the first call with
/// a given configuration shape. Not thread-safe; use one instance per thread.
class Simulator {
 public:
  explicit Simulator(const Graph& g);

  RunOutcome run(const DiffusionConfig& cfg, const EdgeDraws& draws,
                 std::span<const NodeId> ranking);

  /// Final activation mask of the last run() (1 = active), valid until the
  /// next run() on this instance.
  const std::vector<std::uint8_t>& active_mask() const { return active_; }

 private:
  const Graph& graph_;
  std::vector<std::uint8_t> active_;
  std::vector<std::uint8_t> contacted_;
  std::vector<HabituationState> hab_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_frontier_;
};

/// Convenience wrapper around a one-shot Simulator.
RunOutcome run(const Graph& g, const DiffusionConfig& cfg, const EdgeDraws& draws,
               std::span<const NodeId> ranking);

/// The 2x2 of {SingleStage, Sequential} x {habituated, non-habituated}
/// under identical draws and identical ranking.
struct PairedOutcomes {
  RunOutcome single_habituated;
  RunOutcome single_plain;
  RunOutcome sequential_habituated;
  RunOutcome sequential_plain;
};

PairedOutcomes run_paired(const Graph& g, const DiffusionConfig& base, std::uint64_t run_seed);

/// Seed budget implied by a config: ceil(SF * |V|), at least 1.
std::uint32_t seed_budget(const DiffusionConfig& cfg, NodeId node_count);

}  // namespace hicm
