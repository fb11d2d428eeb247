#pragma once

#include <cstdint>
#include <span>

#include "hicm/diffusion.hpp"
#include "hicm/graph.hpp"

namespace hicm {

struct OracleResult {
  double expected_coverage = 0.0;
  double total_mass = 0.0;      // sums to 1 over all enumerated regions
  std::uint64_t regions = 0;    // distinct success/failure labelings visited
};

/// Exact expected coverage by enumerating every success/failure labeling of
/// the attempted directed edges. For a fixed labeling the trajectory is
/// deterministic, and its probability is the product over attempted edges of
/// PP_t (or its complement) at attempt time; unattempted edges contribute 1.
///
/// Refuses graphs with more than 20 directed edges (10 undirected).
OracleResult exact_expected_coverage(const Graph& g, const DiffusionConfig& cfg,
                                     std::span<const NodeId> ranking);

}  // namespace hicm
