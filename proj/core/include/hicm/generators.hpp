#pragma once

#include <cstdint>

#include "hicm/graph.hpp"

namespace hicm {

/// Barabási–Albert preferential attachment. Starts from a clique on m nodes;
/// each later node attaches m edges to existing nodes with probability
/// proportional to current degree, without replacement.
/// Requires 1 <= m < n.
Graph generate_ba(NodeId n, NodeId m, std::uint64_t seed);

/// Erdős–Rényi G(n, p): each of the C(n,2) edges present independently with
/// probability p. Requires 0 <= p <= 1.
Graph generate_er(NodeId n, double p, std::uint64_t seed);

/// Watts–Strogatz: ring lattice with k/2 neighbours per side, each lattice
/// edge rewired with probability beta to a uniform non-duplicate, non-self
/// target. Edge count is exactly n*k/2. Requires k even, 0 < k < n,
/// 0 <= beta <= 1.
Graph generate_ws(NodeId n, NodeId k, double beta, std::uint64_t seed);

}  // namespace hicm
