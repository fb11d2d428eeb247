#include "hicm/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hicm/rng.hpp"

namespace hicm {

namespace {
// Distinct derivation salts: edge draws and random rankings must be
// independent streams of the same run seed.
constexpr std::uint64_t kDrawSalt = 0x9d5fca1b0e8c3347ULL;
constexpr std::uint64_t kRankSalt = 0x51c6d38a97b24e1dULL;

// Node states inside a step.
constexpr std::uint8_t kInactive = 0;
constexpr std::uint8_t kNewlyActive = 1;   // activated this step
constexpr std::uint8_t kSpreading = 2;     // activated previous step
constexpr std::uint8_t kActive = 3;
}  // namespace

void fill_draws(const Graph& g, std::uint64_t run_seed, EdgeDraws& out) {
  Rng rng(mix64(run_seed ^ kDrawSalt));
  out.seed = run_seed;
  out.values.resize(g.directed_edge_count());
  for (double& v : out.values) v = rng.next_double();
}

EdgeDraws draw_coordinated(const Graph& g, std::uint64_t run_seed) {
  EdgeDraws d;
  fill_draws(g, run_seed, d);
  return d;
}

std::vector<NodeId> rank_nodes(const Graph& g, Ranking strategy, std::uint64_t run_seed) {
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  if (strategy == Ranking::Degree) {
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  } else {
    Rng rng(mix64(run_seed ^ kRankSalt));
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.next_below(i)]);
  }
  return order;
}

std::uint32_t seed_budget(const DiffusionConfig& cfg, NodeId node_count) {
  auto b = static_cast<std::uint32_t>(std::ceil(cfg.seed_fraction * node_count));
  return std::max<std::uint32_t>(1, std::min<std::uint32_t>(b, node_count));
}

Simulator::Simulator(const Graph& g) : graph_(g) {
  active_.resize(g.node_count());
  contacted_.resize(g.node_count());
  hab_.resize(g.node_count());
}

RunOutcome Simulator::run(const DiffusionConfig& cfg, const EdgeDraws& draws,
                          std::span<const NodeId> ranking) {
  const NodeId n = graph_.node_count();
  if (ranking.size() != n) throw std::invalid_argument("run: ranking must cover all nodes");
  if (draws.values.size() != graph_.directed_edge_count())
    throw std::invalid_argument("run: draw table does not match graph");

  const double pp = cfg.propagation_probability;
  const bool hab = cfg.habituation_enabled;
  const HabituationParams& hp = cfg.habituation_params;
  const std::uint32_t max_steps = cfg.max_steps ? cfg.max_steps : 10 * n;

  std::fill(active_.begin(), active_.end(), kInactive);
  std::fill(contacted_.begin(), contacted_.end(), std::uint8_t{0});
  if (hab) std::fill(hab_.begin(), hab_.end(), HabituationState{});
  frontier_.clear();
  next_frontier_.clear();

  RunOutcome out;
  out.activations_per_step.clear();
  std::uint32_t budget = seed_budget(cfg, n);
  std::size_t seed_cursor = 0;

  for (std::uint32_t t = 0;; ++t) {
    if (t >= max_steps) {
      out.truncated = true;
      break;
    }
    bool any_event = false;
    next_frontier_.clear();

    // Spreading: nodes activated at t-1 attempt every neighbour that was
    // inactive at the start of this step. Each directed edge is attempted at
    // most once per run (a node spreads in exactly one step).
    for (NodeId u : frontier_) {
      for (const auto& nb : graph_.neighbors(u)) {
        const NodeId v = nb.node;
        const std::uint8_t s = active_[v];
        if (s == kSpreading || s == kActive) continue;
        contacted_[v] = 1;
        const double p = hab ? pp * hab_[v].factor : pp;
        if (s == kInactive && draws.values[nb.out_draw] <= p) {
          active_[v] = kNewlyActive;
          next_frontier_.push_back(v);
          any_event = true;
        }
      }
    }

    // Seeding resolves after spreading. Already-active ranked nodes are
    // skipped for free; budget is spent only on real seedings.
    if (budget > 0) {
      if (cfg.seeding == Seeding::SingleStage) {
        for (std::size_t i = 0; i < ranking.size() && budget > 0; ++i) {
          NodeId v = ranking[i];
          if (active_[v] != kInactive) continue;
          active_[v] = kNewlyActive;
          next_frontier_.push_back(v);
          --budget;
          ++out.seeds_used;
          any_event = true;
        }
        budget = 0;
      } else {
        while (seed_cursor < ranking.size() && active_[ranking[seed_cursor]] != kInactive)
          ++seed_cursor;
        if (seed_cursor == ranking.size()) {
          budget = 0;  // nothing left to seed
        } else {
          NodeId v = ranking[seed_cursor];
          active_[v] = kNewlyActive;
          next_frontier_.push_back(v);
          --budget;
          ++out.seeds_used;
          any_event = true;
        }
      }
    }

    // Habituation bookkeeping; new factors take effect at t+1.
    if (hab) {
      for (NodeId v = 0; v < n; ++v) {
        if (active_[v] != kInactive) continue;
        if (contacted_[v]) {
          hab_[v] = habituate_step(hab_[v], hp);
        } else if (hab_[v].factor < hp.baseline) {
          hab_[v] = recover_step(hab_[v], hp);
        }
      }
    }
    std::fill(contacted_.begin(), contacted_.end(), std::uint8_t{0});

    for (NodeId u : frontier_) active_[u] = kActive;
    for (NodeId u : next_frontier_) active_[u] = kSpreading;
    frontier_.swap(next_frontier_);

    if (any_event) {
      out.duration = t;
      out.activations_per_step.resize(t + 1, 0);
      out.activations_per_step[t] = static_cast<std::uint32_t>(frontier_.size());
    }
    if (frontier_.empty() && budget == 0) break;
  }
  for (NodeId u : frontier_) active_[u] = kActive;

  std::uint32_t active_count = 0;
  for (NodeId v = 0; v < n; ++v)
    if (active_[v] != kInactive) ++active_count;
  out.coverage = static_cast<double>(active_count) / n;
  return out;
}

RunOutcome run(const Graph& g, const DiffusionConfig& cfg, const EdgeDraws& draws,
               std::span<const NodeId> ranking) {
  Simulator sim(g);
  return sim.run(cfg, draws, ranking);
}

PairedOutcomes run_paired(const Graph& g, const DiffusionConfig& base, std::uint64_t run_seed) {
  EdgeDraws draws = draw_coordinated(g, run_seed);
  std::vector<NodeId> ranking = rank_nodes(g, base.ranking, run_seed);
  Simulator sim(g);
  PairedOutcomes out;
  DiffusionConfig cfg = base;
  cfg.seeding = Seeding::SingleStage;
  cfg.habituation_enabled = true;
  out.single_habituated = sim.run(cfg, draws, ranking);
  cfg.habituation_enabled = false;
  out.single_plain = sim.run(cfg, draws, ranking);
  cfg.seeding = Seeding::Sequential;
  out.sequential_plain = sim.run(cfg, draws, ranking);
  cfg.habituation_enabled = true;
  out.sequential_habituated = sim.run(cfg, draws, ranking);
  return out;
}

}  // namespace hicm
