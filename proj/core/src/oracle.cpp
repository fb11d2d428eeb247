#include "hicm/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace hicm {

namespace {

struct TrajState {
  std::vector<std::uint8_t> active;  // 0 inactive, 1 active
  std::vector<std::uint8_t> spreading;  // activated in the previous step
  std::vector<HabituationState> hab;
  std::uint32_t budget = 0;
  std::size_t seed_cursor = 0;
};

struct Attempt {
  NodeId target;
  double success_p;
};

class Enumerator {
 public:
  Enumerator(const Graph& g, const DiffusionConfig& cfg, std::span<const NodeId> ranking)
      : graph_(g), cfg_(cfg), ranking_(ranking) {}

  OracleResult run() {
    TrajState st;
    const NodeId n = graph_.node_count();
    st.active.assign(n, 0);
    st.spreading.assign(n, 0);
    st.hab.assign(n, HabituationState{});
    st.budget = seed_budget(cfg_, n);
    max_steps_ = cfg_.max_steps ? cfg_.max_steps : 10 * n;
    step(st, 1.0, 0);
    return result_;
  }

 private:
  void step(const TrajState& st, double prob, std::uint32_t t) {
    if (t >= max_steps_) {
      accumulate(st, prob);
      return;
    }
    // Attempts of this step: every spreader against every neighbour that is
    // inactive at the step start, at the habituation-modulated probability.
    std::vector<Attempt> attempts;
    for (NodeId u = 0; u < graph_.node_count(); ++u) {
      if (!st.spreading[u]) continue;
      for (const auto& nb : graph_.neighbors(u)) {
        if (st.active[nb.node]) continue;
        double p = cfg_.propagation_probability;
        if (cfg_.habituation_enabled) p *= st.hab[nb.node].factor;
        attempts.push_back({nb.node, p});
      }
    }
    const std::size_t k = attempts.size();
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      double branch_p = prob;
      for (std::size_t i = 0; i < k; ++i)
        branch_p *= (mask >> i & 1) ? attempts[i].success_p : 1.0 - attempts[i].success_p;
      if (branch_p == 0.0) continue;
      resolve_step(st, attempts, mask, branch_p, t);
    }
  }

  void resolve_step(const TrajState& st, const std::vector<Attempt>& attempts,
                    std::uint64_t mask, double prob, std::uint32_t t) {
    TrajState next = st;
    bool any_new = false;
    std::vector<std::uint8_t> contacted(graph_.node_count(), 0);
    std::vector<std::uint8_t> newly(graph_.node_count(), 0);
    for (std::size_t i = 0; i < attempts.size(); ++i) {
      NodeId v = attempts[i].target;
      contacted[v] = 1;
      if (mask >> i & 1) newly[v] = 1;
    }
    // Seeding after spreading resolves, as in the engine.
    if (next.budget > 0) {
      auto is_active = [&](NodeId v) { return st.active[v] || newly[v]; };
      if (cfg_.seeding == Seeding::SingleStage) {
        for (std::size_t i = 0; i < ranking_.size() && next.budget > 0; ++i) {
          if (is_active(ranking_[i])) continue;
          newly[ranking_[i]] = 1;
          --next.budget;
        }
        next.budget = 0;
      } else {
        while (next.seed_cursor < ranking_.size() && is_active(ranking_[next.seed_cursor]))
          ++next.seed_cursor;
        if (next.seed_cursor == ranking_.size()) {
          next.budget = 0;
        } else {
          newly[ranking_[next.seed_cursor]] = 1;
          --next.budget;
        }
      }
    }
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
      next.spreading[v] = newly[v];
      if (newly[v]) {
        next.active[v] = 1;
        any_new = true;
      }
    }
    if (cfg_.habituation_enabled) {
      for (NodeId v = 0; v < graph_.node_count(); ++v) {
        if (next.active[v]) continue;
        if (contacted[v]) {
          next.hab[v] = habituate_step(next.hab[v], cfg_.habituation_params);
        } else if (next.hab[v].factor < cfg_.habituation_params.baseline) {
          next.hab[v] = recover_step(next.hab[v], cfg_.habituation_params);
        }
      }
    }
    if (!any_new && next.budget == 0) {
      accumulate(next, prob);
    } else {
      step(next, prob, t + 1);
    }
  }

  void accumulate(const TrajState& st, double prob) {
    std::uint32_t active = 0;
    for (std::uint8_t a : st.active) active += a;
    result_.expected_coverage += prob * active / graph_.node_count();
    result_.total_mass += prob;
    ++result_.regions;
  }

  const Graph& graph_;
  const DiffusionConfig& cfg_;
  std::span<const NodeId> ranking_;
  std::uint32_t max_steps_ = 0;
  OracleResult result_;
};

}  // namespace

OracleResult exact_expected_coverage(const Graph& g, const DiffusionConfig& cfg,
                                     std::span<const NodeId> ranking) {
  if (g.directed_edge_count() > 20)
    throw std::invalid_argument("exact_expected_coverage: graph exceeds 20 directed edges");
  if (ranking.size() != g.node_count())
    throw std::invalid_argument("exact_expected_coverage: ranking must cover all nodes");
  return Enumerator(g, cfg, ranking).run();
}

}  // namespace hicm
